#include "rellich/verification.hpp"

#include "rellich/error.hpp"
#include "rellich/radial_function.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace rellich {

namespace {

const ParamPolynomial kN = ParamPolynomial::variable(Symbol::Dim);
const ParamPolynomial kA = ParamPolynomial::variable(Symbol::Alpha);
const ParamPolynomial kB = ParamPolynomial::variable(Symbol::Beta);
const ParamPolynomial kS = ParamPolynomial::variable(Symbol::S);

ParamPolynomial rational_c(long long num, long long den = 1) {
  return ParamPolynomial(Rational(num, den));
}

struct CatalogEntry {
  int dim_min;
  int dim_max;  // 0 = unbounded
  bool needs_alpha = false;
  bool needs_beta = false;
  bool needs_s = false;
  bool log_weight = false;
};

const std::map<std::string, CatalogEntry>& catalog_entries() {
  static const std::map<std::string, CatalogEntry> entries = {
      {"2.8", {2, 0, true, true}},
      {"2.1", {2, 0, true, true}},
      {"2.10", {5, 0}},
      {"2.15", {8, 0}},
      {"2.15A", {5, 7}},
      {"2.15a", {2, 0}},
      {"2.19b", {5, 0, false, false, true}},
      {"2.24", {3, 0, true}},
      {"2.25", {3, 0}},
      {"2.30", {1, 1, true, true}},
      {"2.31", {1, 1, true}},
      {"2.33", {1, 1}},
      {"2.34", {1, 1}},
      {"2.32a", {3, 0, true}},
      {"2.33a", {3, 0}},
      {"2.45", {2, 0, false, false, false, true}},
  };
  return entries;
}

const CatalogEntry& entry_for(const std::string& id) {
  auto it = catalog_entries().find(id);
  if (it == catalog_entries().end())
    throw Error(ErrorKind::BadArguments, "unknown inequality id '" + id + "'");
  return it->second;
}

}  // namespace

const std::vector<std::string>& inequality_catalog() {
  static const std::vector<std::string> ids = {
      "2.8",  "2.1",  "2.10", "2.15", "2.15A", "2.15a", "2.19b", "2.24",
      "2.25", "2.30", "2.31", "2.33", "2.34",  "2.32a", "2.33a", "2.45"};
  return ids;
}

bool dimension_valid(const std::string& id, int dim) {
  const CatalogEntry& e = entry_for(id);
  if (dim < e.dim_min) return false;
  if (e.dim_max > 0 && dim > e.dim_max) return false;
  return true;
}

std::vector<int> valid_dimensions(const std::string& id) {
  const CatalogEntry& e = entry_for(id);
  if (e.dim_max == 1) return {1};
  std::vector<int> out;
  for (int n : {2, 3, 4, 5, 7, 8, 10})
    if (dimension_valid(id, n)) out.push_back(n);
  return out;
}

std::vector<VerifyParams> default_param_grid(const std::string& id, int dim) {
  const CatalogEntry& e = entry_for(id);
  std::vector<VerifyParams> out;
  if (id == "2.1") {
    for (Rational a : {Rational(-2), Rational(0), Rational(4), Rational(11, 2)})
      for (Rational b : {Rational(-1), Rational(0), Rational(3)}) {
        VerifyParams p;
        p.alpha = a;
        p.beta = b;
        out.push_back(p);
      }
    return out;
  }
  if (e.needs_alpha && e.needs_beta) {
    for (Rational a : {Rational(-1), Rational(0), Rational(1, 2), Rational(4)})
      for (Rational b : {Rational(-1), Rational(0), Rational(2)}) {
        VerifyParams p;
        p.alpha = a;
        p.beta = b;
        out.push_back(p);
      }
    return out;
  }
  if (e.needs_alpha) {
    for (Rational a : {Rational(-1), Rational(0), Rational(1, 2), Rational(2), Rational(7, 2)}) {
      VerifyParams p;
      p.alpha = a;
      out.push_back(p);
    }
    return out;
  }
  if (e.needs_s) {
    Rational n(dim);
    for (Rational s : {-n * (n - Rational(4)) / Rational(2), Rational(0), Rational(2)}) {
      VerifyParams p;
      p.s = s;
      out.push_back(p);
    }
    return out;
  }
  if (e.log_weight) {
    for (int m : {0, 1, 2}) {
      VerifyParams p;
      p.m = m;
      out.push_back(p);
    }
    return out;
  }
  out.emplace_back();
  return out;
}

InequalityStatement catalog_statement(const std::string& id, const VerifyParams& params,
                                      int dim) {
  const CatalogEntry& e = entry_for(id);
  if (!dimension_valid(id, dim)) {
    std::ostringstream os;
    os << "inequality " << id << " requires ";
    if (e.dim_max == 1) {
      os << "n = 1";
    } else if (e.dim_max > 0) {
      os << e.dim_min << " <= n <= " << e.dim_max;
    } else {
      os << "n >= " << e.dim_min;
    }
    os << " (got n = " << dim << ")";
    throw Error(ErrorKind::ConstraintViolation, os.str());
  }
  if (e.needs_alpha && !params.alpha)
    throw Error(ErrorKind::ConstraintViolation, "inequality " + id + " requires --alpha");
  if (e.needs_beta && !params.beta)
    throw Error(ErrorKind::ConstraintViolation, "inequality " + id + " requires --beta");
  if (e.needs_s && !params.s)
    throw Error(ErrorKind::ConstraintViolation, "inequality " + id + " requires --s");

  InequalityStatement st;
  st.id = id;
  auto lap2 = FormBasisElement::lap2;
  auto grad = FormBasisElement::grad;
  auto eul = FormBasisElement::eul;
  auto val = FormBasisElement::val;

  if (id == "2.8") {
    st.lhs.add(lap2(), rational_c(1));
    st.rhs.add(grad(2), (kN - rational_c(4)) * kA - rational_c(2) * kB);
    st.rhs.add(eul(4), -kA * (kA - rational_c(4)));
    st.rhs.add(val(4), kB * ((kN - rational_c(4)) * (kA - rational_c(2)) - kB));
  } else if (id == "2.1") {
    const Rational& a = *params.alpha;
    if (a > Rational(0) && a < Rational(4))
      throw Error(ErrorKind::ConstraintViolation,
                  "inequality 2.1 requires α <= 0 or α >= 4 (got " + a.to_string() + ")");
    st.lhs.add(lap2(), rational_c(1));
    st.rhs.add(grad(2), kA * (kN - kA) - rational_c(2) * kB);
    st.rhs.add(val(4), kB * ((kN - rational_c(4)) * (kA - rational_c(2)) - kB));
  } else if (id == "2.10") {
    st.lhs.add(lap2(), rational_c(1));
    st.rhs.add(val(4), (kN * (kN - rational_c(4))).pow(2) * rational_c(1, 16));
  } else if (id == "2.15") {
    st.lhs.add(lap2(), rational_c(1));
    st.rhs.add(grad(2), kN * kN * rational_c(1, 4));
  } else if (id == "2.15A") {
    st.lhs.add(lap2(), rational_c(1));
    st.rhs.add(grad(2), rational_c(4) * (kN - rational_c(4)));
  } else if (id == "2.15a") {
    st.lhs.add(lap2(), rational_c(1));
    st.rhs.add(eul(4), kN * kN * rational_c(1, 4));
  } else if (id == "2.19b") {
    Rational n(dim);
    Rational s_min = -n * (n - Rational(4)) / Rational(2);
    if (*params.s < s_min)
      throw Error(ErrorKind::ConstraintViolation,
                  "inequality 2.19b requires s >= -n(n-4)/2 = " + s_min.to_string());
    st.lhs.add(lap2(), rational_c(1));
    st.rhs.add(grad(2), -kS);
    st.rhs.add(val(4),
               (kN - rational_c(4)).pow(2) * (rational_c(4) * kS + kN * kN) * rational_c(1, 16));
  } else if (id == "2.24") {
    st.lhs.add(grad(0), rational_c(1));
    st.rhs.add(val(2), kA * (kN - rational_c(2) - kA));
  } else if (id == "2.25") {
    st.lhs.add(grad(0), rational_c(1));
    st.rhs.add(val(2), (kN - rational_c(2)).pow(2) * rational_c(1, 4));
  } else if (id == "2.30") {
    st.lhs.add(lap2(), rational_c(1));
    st.rhs.add(grad(2), kA - kA * kA - rational_c(2) * kB);
    st.rhs.add(val(4), kB * (rational_c(6) - kB - rational_c(3) * kA));
  } else if (id == "2.31") {
    st.lhs.add(lap2(), rational_c(1));
    st.rhs.add(val(4), rational_c(3) * kA - rational_c(19, 4) * kA.pow(2) +
                           rational_c(2) * kA.pow(3) - rational_c(1, 4) * kA.pow(4));
  } else if (id == "2.33") {
    st.lhs.add(lap2(), rational_c(1));
    st.rhs.add(val(4), rational_c(9, 16));
  } else if (id == "2.34") {
    st.lhs.add(lap2(), rational_c(1));
    st.rhs.add(grad(2), rational_c(1, 4));
  } else if (id == "2.32a") {
    st.lhs.add(eul(2), rational_c(1));
    st.rhs.add(val(2), kA * (kN - rational_c(2) - kA));
  } else if (id == "2.33a") {
    st.lhs.add(eul(2), rational_c(1));
    st.rhs.add(val(2), (kN - rational_c(2)).pow(2) * rational_c(1, 4));
  } else if (id == "2.45") {
    if (params.m < 0 || params.m > 4)
      throw Error(ErrorKind::ConstraintViolation, "inequality 2.45 requires 0 <= m <= 4");
    st.lhs.add(grad(0), rational_c(1));
    st.log_weight_rhs = true;
    st.log_m = params.m;
  } else {
    throw Error(ErrorKind::BadArguments, "unknown inequality id '" + id + "'");
  }
  return st;
}

namespace {

Bindings bindings_for(const VerifyParams& params, int dim) {
  Bindings b;
  b.set(Symbol::Dim, Rational(dim));
  if (params.alpha) b.set(Symbol::Alpha, *params.alpha);
  if (params.beta) b.set(Symbol::Beta, *params.beta);
  if (params.s) b.set(Symbol::S, *params.s);
  return b;
}

std::string params_to_string(const VerifyParams& params, int dim) {
  std::ostringstream os;
  os << "n=" << dim;
  if (params.alpha) os << " α=" << params.alpha->to_string();
  if (params.beta) os << " β=" << params.beta->to_string();
  if (params.s) os << " s=" << params.s->to_string();
  if (params.gamma > 0.0 || params.m > 0) os << " m=" << params.m;
  if (params.gamma > 0.0) os << " γ=" << params.gamma;
  return os.str();
}

std::vector<FormBasisElement> needed_elements(const QuadraticForm& q) {
  std::vector<FormBasisElement> out;
  for (const auto& [b, c] : q.coefficients()) out.push_back(b);
  return out;
}

}  // namespace

VerificationReport verify_inequality(const std::string& id, const VerifyParams& params,
                                     int dim, const std::vector<TestProfile>& profiles,
                                     double tol_rel, const QuadratureOptions& opts) {
  InequalityStatement st = catalog_statement(id, params, dim);
  Bindings b = bindings_for(params, dim);

  VerificationReport report;
  report.inequality = id;
  report.dim = dim;
  report.params = params_to_string(params, dim);
  report.tol_rel = tol_rel;
  report.pass = true;
  report.min_residual = std::numeric_limits<double>::infinity();

  std::vector<FormBasisElement> elements = needed_elements(st.lhs);
  auto rhs_elements = needed_elements(st.rhs);
  elements.insert(elements.end(), rhs_elements.begin(), rhs_elements.end());

  for (const TestProfile& p : profiles) {
    if (p.dim != dim)
      throw Error(ErrorKind::BadArguments, "profile dimension does not match the inequality");
    IntegralSet integrals = basis_integrals(p, elements, opts);
    double lhs = evaluate_form(st.lhs, b, integrals);
    double rhs;
    double err = 0.0;
    for (const FormBasisElement& e : elements) err += integrals.error(e);
    if (st.log_weight_rhs) {
      double gamma = params.gamma > 0.0 ? params.gamma
                                        : std::exp(4.0) * p.radial->hi();
      if (gamma <= p.radial->hi())
        throw Error(ErrorKind::ConstraintViolation,
                    "inequality 2.45 requires support radius < γ");
      IntegralEstimate west =
          weighted_value_integral(log_hardy_weight(st.log_m), b, gamma, p, opts);
      rhs = west.value;
      err += west.error;
    } else {
      rhs = evaluate_form(st.rhs, b, integrals);
    }
    double residual = lhs - rhs;
    double scale = std::max(std::abs(lhs), std::abs(rhs));
    bool pass = residual >= -tol_rel * scale;
    report.rows.push_back({p.describe(), lhs, rhs, residual, err, pass});
    report.min_residual = std::min(report.min_residual, residual);
    report.pass = report.pass && pass;
  }
  return report;
}

std::vector<VerificationReport> verify_catalog(double tol_rel, const QuadratureOptions& opts) {
  std::vector<VerificationReport> out;
  for (const std::string& id : inequality_catalog()) {
    for (int dim : valid_dimensions(id)) {
      std::vector<TestProfile> profiles =
          entry_for(id).log_weight ? log_suite(dim, 1.0) : standard_suite(dim);
      for (const VerifyParams& params : default_param_grid(id, dim)) {
        out.push_back(verify_inequality(id, params, dim, profiles, tol_rel, opts));
      }
    }
  }
  return out;
}

Rational sharpness_constant(const std::string& id, int dim) {
  Rational n(dim);
  if (id == "2.10") return (n * (n - Rational(4)) / Rational(4)).pow(2);
  if (id == "2.25") return ((n - Rational(2)) / Rational(2)).pow(2);
  if (id == "2.33") return Rational(9, 16);
  throw Error(ErrorKind::BadArguments, "no sharpness sweep for inequality '" + id + "'");
}

std::vector<SharpnessPoint> sharpness_sweep(const std::string& id, int dim,
                                            const std::vector<double>& widths,
                                            const QuadratureOptions& opts) {
  for (size_t i = 1; i < widths.size(); ++i)
    if (widths[i] <= widths[i - 1])
      throw Error(ErrorKind::BadArguments, "sweep widths must be increasing");

  double exponent;
  FormBasisElement lhs_elem = FormBasisElement::lap2();
  FormBasisElement rhs_elem = FormBasisElement::val(4);
  if (id == "2.10") {
    if (dim < 5)
      throw Error(ErrorKind::ConstraintViolation, "inequality 2.10 requires n >= 5");
    exponent = -0.5 * (dim - 4);
  } else if (id == "2.25") {
    if (dim < 3)
      throw Error(ErrorKind::ConstraintViolation, "inequality 2.25 requires n >= 3");
    exponent = -0.5 * (dim - 2);
    lhs_elem = FormBasisElement::grad(0);
    rhs_elem = FormBasisElement::val(2);
  } else if (id == "2.33") {
    if (dim != 1)
      throw Error(ErrorKind::ConstraintViolation, "inequality 2.33 lives on the half-line");
    exponent = 1.5;
  } else {
    throw Error(ErrorKind::BadArguments, "no sharpness sweep for inequality '" + id + "'");
  }

  std::vector<SharpnessPoint> out;
  for (double m : widths) {
    TestProfile p = make_power_profile(exponent, m, 0, dim);
    IntegralSet integrals = basis_integrals(p, {lhs_elem, rhs_elem}, opts);
    out.push_back({m, integrals.value(lhs_elem) / integrals.value(rhs_elem)});
  }
  return out;
}

std::string report_to_json(const std::vector<VerificationReport>& reports,
                           const std::map<std::string, std::string>& config) {
  nlohmann::ordered_json root;
  root["config"] = config;
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const VerificationReport& r : reports) {
    for (const ProfileVerdict& row : r.rows) {
      nlohmann::ordered_json item;
      item["inequality"] = r.inequality;
      item["params"] = r.params;
      item["profile"] = row.profile;
      item["lhs"] = row.lhs;
      item["rhs"] = row.rhs;
      item["residual"] = row.residual;
      item["error_bound"] = row.error_bound;
      item["verdict"] = row.pass ? "pass" : "fail";
      items.push_back(std::move(item));
    }
  }
  root["results"] = std::move(items);
  return root.dump(2) + "\n";
}

std::string report_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "inequality,params,profile,lhs,rhs,residual,error_bound,verdict\n";
  os.precision(17);
  for (const VerificationReport& r : reports) {
    for (const ProfileVerdict& row : r.rows) {
      os << r.inequality << ",\"" << r.params << "\",\"" << row.profile << "\"," << row.lhs
         << "," << row.rhs << "," << row.residual << "," << row.error_bound << ","
         << (row.pass ? "pass" : "fail") << "\n";
    }
  }
  return os.str();
}

std::string sweep_to_csv(const std::string& id, int dim,
                         const std::vector<SharpnessPoint>& points) {
  std::ostringstream os;
  os << "inequality,dim,width,ratio,optimal_constant\n";
  os.precision(17);
  double c = sharpness_constant(id, dim).to_double();
  for (const SharpnessPoint& p : points)
    os << id << "," << dim << "," << p.width << "," << p.ratio << "," << c << "\n";
  return os.str();
}

}  // namespace rellich
