#include "rellich/constants.hpp"

#include "rellich/error.hpp"
#include "rellich/form_reduction.hpp"
#include "rellich/operator_algebra.hpp"
#include "rellich/radial_function.hpp"

#include <algorithm>
#include <sstream>

namespace rellich {

const char* family_label(FamilyName f) {
  switch (f) {
    case FamilyName::Rellich: return "rellich";
    case FamilyName::GradH: return "grad_H";
    case FamilyName::GradF: return "grad_F";
    case FamilyName::EulerK: return "euler_K";
    case FamilyName::Schmincke: return "schmincke";
    case FamilyName::Halfline: return "halfline";
    case FamilyName::Hardy: return "hardy";
    case FamilyName::ImprovedHardy: return "improved_hardy";
  }
  return "?";
}

std::optional<FamilyName> family_from_label(const std::string& label) {
  for (FamilyName f : {FamilyName::Rellich, FamilyName::GradH, FamilyName::GradF,
                       FamilyName::EulerK, FamilyName::Schmincke, FamilyName::Halfline,
                       FamilyName::Hardy, FamilyName::ImprovedHardy}) {
    if (label == family_label(f)) return f;
  }
  return std::nullopt;
}

bool ConstraintInterval::contains(const ExactValue& x) const {
  if (lo.has_value() && x.compare(ExactValue(*lo)) < 0) return false;
  if (hi.has_value() && x.compare(ExactValue(*hi)) > 0) return false;
  return true;
}

std::string ConstraintInterval::to_string() const {
  std::ostringstream os;
  os << (lo.has_value() ? "[" + lo->to_string() : "(-∞");
  os << ", ";
  os << (hi.has_value() ? hi->to_string() + "]" : "∞)");
  return os.str();
}

namespace {

const ParamPolynomial kN = ParamPolynomial::variable(Symbol::Dim);
const ParamPolynomial kAlpha = ParamPolynomial::variable(Symbol::Alpha);
const ParamPolynomial kBeta = ParamPolynomial::variable(Symbol::Beta);

std::vector<ConstraintInterval> outside_zero_four() {
  return {{std::nullopt, Rational(0)}, {Rational(4), std::nullopt}};
}
std::vector<ConstraintInterval> whole_line() { return {{std::nullopt, std::nullopt}}; }

// Transposed inequality coefficients of the relaxed two-parameter form:
// from ⟨f, T⁺Tf⟩ reduced to the basis and relaxed Eul(4) -> Grad(2),
// the statement reads ∫(Δf)² >= c_grad·∫r^-2|∇f|² + c_val·∫r^-4 f².
struct RelaxedCoefficients {
  ParamPolynomial c_grad;  // α(n-α) - 2β
  ParamPolynomial c_val;   // β[(n-4)(α-2) - β]
};

const RelaxedCoefficients& relaxed_two_parameter_form() {
  static const RelaxedCoefficients coeffs = [] {
    OperatorExpr t = make_t_alpha_beta();
    QuadraticForm q = reduce_to_form(compose(adjoint(t), t));
    RelaxResult relaxed = cauchy_relax(q, RelaxDirection::EulToGrad, 2);
    return RelaxedCoefficients{-relaxed.form.coefficient(FormBasisElement::grad(2)),
                               -relaxed.form.coefficient(FormBasisElement::val(4))};
  }();
  return coeffs;
}

// (2.16)-style split: β = (n-4)(α-2) in the unrelaxed form leaves Grad and
// Eul terms only.
QuadraticForm sixteen_form() {
  OperatorExpr t = make_t_alpha_beta();
  QuadraticForm q = reduce_to_form(compose(adjoint(t), t));
  ParamPolynomial beta_sub = (kN - ParamPolynomial(4)) * (kAlpha - ParamPolynomial(2));
  QuadraticForm out;
  for (const auto& [b, c] : q.coefficients())
    out.add(b, c.substitute_symbol(Symbol::Beta, beta_sub));
  return out;
}

}  // namespace

InequalityFamily make_family(FamilyName name) {
  switch (name) {
    case FamilyName::Rellich: {
      const auto& rc = relaxed_two_parameter_form();
      ParamPolynomial beta_sub = kAlpha * (kN - kAlpha) * ParamPolynomial(Rational(1, 2));
      return {name, rc.c_val.substitute_symbol(Symbol::Beta, beta_sub), outside_zero_four()};
    }
    case FamilyName::GradF: {
      const auto& rc = relaxed_two_parameter_form();
      return {name, rc.c_grad.substitute_symbol(Symbol::Beta, ParamPolynomial()),
              outside_zero_four()};
    }
    case FamilyName::GradH: {
      RelaxResult relaxed = cauchy_relax(sixteen_form(), RelaxDirection::EulToGrad, 2);
      return {name, -relaxed.form.coefficient(FormBasisElement::grad(2)),
              {{std::nullopt, Rational(0)}}};
    }
    case FamilyName::EulerK: {
      RelaxResult relaxed = cauchy_relax(sixteen_form(), RelaxDirection::GradToEul, 2);
      ParamPolynomial objective = -relaxed.form.coefficient(FormBasisElement::eul(4));
      // Constraint (4-n) <= α <= 4, with the lower endpoint depending on n;
      // the dependence is resolved at optimize time.
      InequalityFamily fam{name, objective, {{std::nullopt, Rational(4)}}};
      fam.depends_on_dim = true;
      return fam;
    }
    case FamilyName::Schmincke: {
      const auto& rc = relaxed_two_parameter_form();
      // β = 2^-1 (n-4)[α - 2 - 4^-1 (n-4)]
      ParamPolynomial beta_sub =
          ParamPolynomial(Rational(1, 2)) * (kN - ParamPolynomial(4)) *
          (kAlpha - ParamPolynomial(2) -
           ParamPolynomial(Rational(1, 4)) * (kN - ParamPolynomial(4)));
      return {name, rc.c_val.substitute_symbol(Symbol::Beta, beta_sub), outside_zero_four()};
    }
    case FamilyName::Halfline: {
      OperatorExpr t = make_t_alpha_beta();
      Bindings one;
      one.set(Symbol::Dim, Rational(1));
      QuadraticForm q =
          reduce_to_form(specialize(compose(adjoint(t), t), one), ReduceMode::OneDim);
      ParamPolynomial c_val = -q.coefficient(FormBasisElement::val(4));
      ParamPolynomial beta_sub =
          (kAlpha - kAlpha * kAlpha) * ParamPolynomial(Rational(1, 2));
      InequalityFamily fam{name, c_val.substitute_symbol(Symbol::Beta, beta_sub),
                           whole_line()};
      fam.depends_on_dim = false;
      return fam;
    }
    case FamilyName::Hardy: {
      VectorFactor factor{RadialFunction::monomial(kAlpha, -2)};
      RadialFunction v = potential_of_factor(factor);
      // V = α(α+2-n) r^-2; the inequality coefficient is -V's coefficient.
      auto it = v.terms().find(LogMonomialKey{-2, {}});
      if (it == v.terms().end())
        throw Error(ErrorKind::BadArguments, "unexpected first-order potential shape");
      InequalityFamily fam{name, -it->second, whole_line()};
      return fam;
    }
    case FamilyName::ImprovedHardy: {
      OperatorExpr t = make_tilde_t_alpha();
      QuadraticForm q = reduce_to_form(compose(adjoint(t), t));
      InequalityFamily fam{name, -q.coefficient(FormBasisElement::val(2)), whole_line()};
      return fam;
    }
  }
  throw Error(ErrorKind::BadArguments, "unknown family");
}

namespace {

std::vector<ConstraintInterval> constraint_for_dim(const InequalityFamily& family,
                                                   const Rational& n) {
  if (family.name == FamilyName::EulerK)
    return {{Rational(4) - n, Rational(4)}};
  return family.constraint;
}

}  // namespace

OptimizationResult optimize_family(const InequalityFamily& family, const Rational& n) {
  Bindings nb;
  nb.set(Symbol::Dim, n);
  ParamPolynomial objective = family.objective.substitute(nb);
  UniPoly f = UniPoly::from_param(objective, Symbol::Alpha);
  std::vector<ConstraintInterval> constraint = constraint_for_dim(family, n);

  if (f.degree() <= 0) {
    Rational value = f.is_zero() ? Rational(0) : f.coefficients()[0];
    return {{}, ExactValue(value), false};
  }

  // Unboundedness on any unbounded constraint piece.
  for (const auto& interval : constraint) {
    if (!interval.hi.has_value() && f.sign_at_infinity(+1) > 0)
      throw Error(ErrorKind::UnboundedObjective,
                  std::string("objective of family '") + family_label(family.name) +
                      "' is unbounded above as α -> +∞");
    if (!interval.lo.has_value() && f.sign_at_infinity(-1) > 0)
      throw Error(ErrorKind::UnboundedObjective,
                  std::string("objective of family '") + family_label(family.name) +
                      "' is unbounded above as α -> -∞");
  }

  struct Candidate {
    ExactValue point;
    bool is_boundary;
  };
  std::vector<Candidate> candidates;
  auto add_candidate = [&](ExactValue point, bool boundary) {
    for (auto& c : candidates) {
      if (c.point.compare(point) == 0) {
        c.is_boundary = c.is_boundary || boundary;
        return;
      }
    }
    candidates.push_back({std::move(point), boundary});
  };

  UniPoly df = f.derivative();
  std::vector<RootInterval> critical =
      df.is_zero() ? std::vector<RootInterval>{} : isolate_real_roots(df);
  for (const auto& interval : constraint) {
    for (const auto& root : critical) {
      ExactValue point = exact_root(root);
      if (interval.contains(point)) add_candidate(std::move(point), false);
    }
    if (interval.lo.has_value()) add_candidate(ExactValue(*interval.lo), true);
    if (interval.hi.has_value()) add_candidate(ExactValue(*interval.hi), true);
  }
  if (candidates.empty())
    throw Error(ErrorKind::BadArguments, "constraint set produced no candidates");

  std::vector<std::pair<Candidate, ExactValue>> evaluated;
  evaluated.reserve(candidates.size());
  for (auto& c : candidates) evaluated.emplace_back(c, eval_at(f, c.point));

  const ExactValue* best = &evaluated.front().second;
  for (const auto& [c, v] : evaluated)
    if (v.compare(*best) > 0) best = &v;

  OptimizationResult result{{}, *best, true};
  for (const auto& [c, v] : evaluated) {
    if (v.compare(*best) == 0) {
      result.maximizers.push_back({c.point, c.is_boundary});
      result.boundary_attained = result.boundary_attained && c.is_boundary;
    }
  }
  std::sort(result.maximizers.begin(), result.maximizers.end(),
            [](const Maximizer& a, const Maximizer& b) { return a.point.compare(b.point) < 0; });
  return result;
}

namespace {

void verify_schmincke_coefficients(const Rational& alpha, const Rational& beta,
                                   const Rational& n, const Rational& s,
                                   const Rational& grad_c, const Rational& val_c) {
  const auto& rc = relaxed_two_parameter_form();
  Bindings b;
  b.set(Symbol::Dim, n).set(Symbol::Alpha, alpha).set(Symbol::Beta, beta);
  if (rc.c_grad.evaluate(b) != grad_c || rc.c_val.evaluate(b) != val_c)
    throw Error(ErrorKind::BadArguments,
                "interpolation coefficients disagree with the relaxed form");
  if (grad_c != -s)
    throw Error(ErrorKind::BadArguments, "gradient coefficient is not -s");
}

Rational schmincke_val_coefficient(const Rational& s, const Rational& n) {
  Rational q = (n - Rational(4)) / Rational(4);
  return q * q * (Rational(4) * s + n * n);
}

}  // namespace

SchminckeResult schmincke_from_alpha(const Rational& alpha, const Rational& n) {
  if (alpha > Rational(0) && alpha < Rational(4))
    throw Error(ErrorKind::ConstraintViolation,
                "α must satisfy α <= 0 or α >= 4 (got " + alpha.to_string() + ")");
  Rational s = alpha * alpha - Rational(4) * alpha - n * (n - Rational(4)) / Rational(2);
  Rational beta = (n - Rational(4)) *
                  (alpha - Rational(2) - (n - Rational(4)) / Rational(4)) / Rational(2);
  SchminckeResult out{s, -s, schmincke_val_coefficient(s, n), beta, {ExactValue(alpha)}};
  verify_schmincke_coefficients(alpha, beta, n, s, out.grad_coefficient, out.val_coefficient);
  return out;
}

SchminckeResult schmincke_from_s(const Rational& s, const Rational& n) {
  Rational s_min = -n * (n - Rational(4)) / Rational(2);
  if (s < s_min)
    throw Error(ErrorKind::ConstraintViolation,
                "s must satisfy s >= -n(n-4)/2 = " + s_min.to_string() + " (got " +
                    s.to_string() + ")");
  SchminckeResult out{s, -s, schmincke_val_coefficient(s, n), std::nullopt, {}};
  // α solves α² - 4α - (n(n-4)/2 + s) = 0.
  Rational c0 = -(n * (n - Rational(4)) / Rational(2) + s);
  Rational disc = Rational(4) - c0;  // (α-2)² = 4 - c0
  if (auto root = exact_sqrt(disc)) {
    out.alpha.push_back(ExactValue(Rational(2) - *root));
    out.alpha.push_back(ExactValue(Rational(2) + *root));
  } else {
    UniPoly minpoly(std::vector<Rational>{c0, Rational(-4), Rational(1)});
    for (const auto& root : isolate_real_roots(minpoly)) out.alpha.push_back(exact_root(root));
  }
  // Cross-check through the α route whenever α came out rational.
  for (const auto& a : out.alpha) {
    if (a.is_rational()) {
      SchminckeResult back = schmincke_from_alpha(a.rational(), n);
      if (back.s != s)
        throw Error(ErrorKind::BadArguments, "s <-> α correspondence failed to round-trip");
    }
  }
  return out;
}

}  // namespace rellich
