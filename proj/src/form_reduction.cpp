#include "rellich/form_reduction.hpp"

#include "rellich/error.hpp"

#include <ostream>
#include <sstream>

namespace rellich {

std::string FormBasisElement::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case FormKind::Lap2: os << "∫(Δf)²"; break;
    case FormKind::Grad:
      os << "∫";
      if (s > 0) os << "|x|^-" << s << " ";
      os << "|∇f|²";
      break;
    case FormKind::Eul:
      os << "∫";
      if (s > 0) os << "|x|^-" << s << " ";
      os << "(x·∇f)²";
      break;
    case FormKind::Val:
      os << "∫";
      if (s > 0) os << "|x|^-" << s << " ";
      os << "f²";
      break;
  }
  return os.str();
}

ParamPolynomial QuadraticForm::coefficient(const FormBasisElement& b) const {
  auto it = coeffs_.find(b);
  return it == coeffs_.end() ? ParamPolynomial() : it->second;
}

void QuadraticForm::add(const FormBasisElement& b, const ParamPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

QuadraticForm QuadraticForm::operator-() const {
  QuadraticForm r;
  for (const auto& [b, c] : coeffs_) r.coeffs_.emplace(b, -c);
  return r;
}

QuadraticForm& QuadraticForm::operator+=(const QuadraticForm& o) {
  for (const auto& [b, c] : o.coeffs_) add(b, c);
  return *this;
}

QuadraticForm& QuadraticForm::operator-=(const QuadraticForm& o) {
  for (const auto& [b, c] : o.coeffs_) add(b, -c);
  return *this;
}

QuadraticForm QuadraticForm::scaled(const ParamPolynomial& c) const {
  QuadraticForm r;
  for (const auto& [b, coeff] : coeffs_) r.add(b, coeff * c);
  return r;
}

QuadraticForm QuadraticForm::substitute(const Bindings& b) const {
  QuadraticForm r;
  for (const auto& [elem, coeff] : coeffs_) r.add(elem, coeff.substitute(b));
  return r;
}

namespace {
void render_terms(std::ostringstream& os, const QuadraticForm::TermMap& coeffs,
                  bool negate_all, bool skip_lap2) {
  bool leading = true;
  for (const auto& [b, c0] : coeffs) {
    if (skip_lap2 && b.kind == FormKind::Lap2) continue;
    ParamPolynomial c = negate_all ? -c0 : c0;
    bool negated = false;
    if (c.terms().size() == 1 && c.terms().begin()->second.sign() < 0) {
      negated = true;
      c = -c;
    }
    os << (leading ? (negated ? "-" : "") : (negated ? " - " : " + "));
    leading = false;
    bool unit = c.is_constant() && c.constant_value() == Rational(1);
    if (!unit) {
      if (c.terms().size() > 1) {
        os << "(" << c.to_string() << ")";
      } else {
        os << c.to_string();
      }
      os << "·";
    }
    os << b.to_string();
  }
  if (leading) os << "0";
}
}  // namespace

std::string QuadraticForm::to_string() const {
  std::ostringstream os;
  render_terms(os, coeffs_, false, false);
  return os.str();
}

std::string QuadraticForm::to_inequality_string() const {
  auto lap2 = coeffs_.find(FormBasisElement::lap2());
  if (lap2 == coeffs_.end() || !lap2->second.is_constant() ||
      lap2->second.constant_value() != Rational(1))
    throw Error(ErrorKind::BadArguments,
                "inequality rendering expects a unit ∫(Δf)² term");
  std::ostringstream os;
  os << lap2->first.to_string() << " ≥ ";
  render_terms(os, coeffs_, true, true);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadraticForm& q) {
  return os << q.to_string();
}

namespace {

std::string term_name(const OperatorKey& k) {
  std::ostringstream os;
  os << "r^-" << k.rpow << "·D^" << k.dpow << "·Δ^" << k.lpow;
  return os.str();
}

// ∫ r^-s f (Df): (B2).
QuadraticForm reduce_weight_euler(int s) {
  QuadraticForm q;
  // -((n - s)/2) · Val(s)
  ParamPolynomial n = ParamPolynomial::variable(Symbol::Dim);
  q.add(FormBasisElement::val(s), (n - ParamPolynomial(Rational(s))) * ParamPolynomial(Rational(-1, 2)));
  return q;
}

QuadraticForm reduce_term(const OperatorKey& k) {
  ParamPolynomial n = ParamPolynomial::variable(Symbol::Dim);
  QuadraticForm q;
  if (k.dpow == 0 && k.lpow == 0) {
    // (B1) ∫ r^-s f·f
    q.add(FormBasisElement::val(k.rpow), ParamPolynomial(1));
    return q;
  }
  if (k.dpow == 1 && k.lpow == 0) {
    // (B2)
    return reduce_weight_euler(k.rpow);
  }
  if (k.dpow == 2 && k.lpow == 0) {
    // (B3) ∫ r^-s f (D²f) = -(n-s)·(B2) - Eul(s)
    ParamPolynomial factor = -(n - ParamPolynomial(Rational(k.rpow)));
    q += reduce_weight_euler(k.rpow).scaled(factor);
    q.add(FormBasisElement::eul(k.rpow), ParamPolynomial(-1));
    return q;
  }
  if (k.dpow == 0 && k.lpow == 1) {
    // (B4) ∫ r^-s f (Δf) = -Grad(s) + s·∫ r^-s-2 f (Df)
    q.add(FormBasisElement::grad(k.rpow), ParamPolynomial(-1));
    if (k.rpow != 0)
      q += reduce_weight_euler(k.rpow + 2).scaled(ParamPolynomial(Rational(k.rpow)));
    return q;
  }
  if (k.dpow == 0 && k.lpow == 2 && k.rpow == 0) {
    // (B5) ∫ f (Δ²f)
    q.add(FormBasisElement::lap2(), ParamPolynomial(1));
    return q;
  }
  throw Error(ErrorKind::IrreducibleTerm,
              "term " + term_name(k) + " is outside the reducible shapes");
}

}  // namespace

QuadraticForm reduce_to_form(const OperatorExpr& a, ReduceMode mode) {
  QuadraticForm q;
  for (const auto& [k, c] : a.terms()) q += reduce_term(k).scaled(c);
  if (mode == ReduceMode::OneDim) {
    Bindings one;
    one.set(Symbol::Dim, Rational(1));
    QuadraticForm bound = q.substitute(one);
    // On the half-line (Df)² = x² f'², so Eul(s) coincides with Grad(s-2).
    QuadraticForm out;
    for (const auto& [b, c] : bound.coefficients()) {
      if (b.kind == FormKind::Eul && b.s >= 2) {
        out.add(FormBasisElement::grad(b.s - 2), c);
      } else {
        out.add(b, c);
      }
    }
    return out;
  }
  return q;
}

RelaxResult cauchy_relax(const QuadraticForm& q, RelaxDirection direction, int s) {
  FormBasisElement source = direction == RelaxDirection::EulToGrad
                                ? FormBasisElement::eul(s + 2)
                                : FormBasisElement::grad(s);
  FormBasisElement target = direction == RelaxDirection::EulToGrad
                                ? FormBasisElement::grad(s)
                                : FormBasisElement::eul(s + 2);
  auto it = q.coefficients().find(source);
  if (it == q.coefficients().end())
    throw Error(ErrorKind::RelaxTargetAbsent,
                "form has no " + source.to_string() + " term to relax");
  ParamPolynomial moved = it->second;
  RelaxResult res;
  res.form = q;
  res.form.add(source, -moved);
  res.form.add(target, moved);
  // In the ⟨f, Af⟩ convention the move is sound (the relaxed form dominates)
  // when the Eul-side coefficient is >= 0 for EulToGrad, and <= 0 for
  // GradToEul; both record a ">= 0" polynomial.
  res.condition_nonnegative =
      direction == RelaxDirection::EulToGrad ? moved : -moved;
  res.condition = res.condition_nonnegative.to_string() + " ≥ 0";
  return res;
}

double IntegralSet::value(const FormBasisElement& b) const {
  auto it = values_.find(b);
  if (it == values_.end())
    throw Error(ErrorKind::MissingBasisValue, "no value for " + b.to_string());
  return it->second.first;
}

double IntegralSet::error(const FormBasisElement& b) const {
  auto it = values_.find(b);
  if (it == values_.end())
    throw Error(ErrorKind::MissingBasisValue, "no error bound for " + b.to_string());
  return it->second.second;
}

double evaluate_form(const QuadraticForm& q, const Bindings& b, const IntegralSet& integrals) {
  // Kahan compensated summation.
  double sum = 0.0, comp = 0.0;
  for (const auto& [elem, coeff] : q.coefficients()) {
    double term = coeff.evaluate(b).to_double() * integrals.value(elem);
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace rellich
