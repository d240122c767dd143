#include "rellich/quadrature.hpp"

#include "rellich/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <map>
#include <mutex>

namespace rellich {

const GaussRule& gauss_legendre(int order) {
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    // Chebyshev initial guess, then Newton on P_order.
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = order * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return cache.emplace(order, std::move(rule)).first->second;
}

namespace {

// Panel boundaries in u = ln r: `base` uniform panels with the first and
// last panel split dyadically four more levels toward the endpoints.
std::vector<double> panel_bounds(double ua, double ub, int base) {
  std::vector<double> b;
  double h = (ub - ua) / base;
  b.push_back(ua);
  for (int k = 4; k >= 1; --k) b.push_back(ua + h / (1 << k));
  for (int i = 1; i < base; ++i) b.push_back(ua + i * h);
  for (int k = 1; k <= 4; ++k) b.push_back(ub - h / (1 << k));
  b.push_back(ub);
  return b;
}

struct PanelResult {
  double value = 0.0;  // order-16 value
  double diff = 0.0;   // |order-16 - order-8|
};

PanelResult eval_panel(const std::function<double(double)>& f, double a, double b,
                       const GaussRule& g16, const GaussRule& g8) {
  double mid = 0.5 * (a + b);
  double half = 0.5 * (b - a);
  auto sample = [&](double u) {
    double r = std::exp(u);
    return f(r) * r;  // du-measure: dr = r du
  };
  double v16 = 0.0;
  for (size_t i = 0; i < g16.nodes.size(); ++i)
    v16 += g16.weights[i] * sample(mid + half * g16.nodes[i]);
  double v8 = 0.0;
  for (size_t i = 0; i < g8.nodes.size(); ++i)
    v8 += g8.weights[i] * sample(mid + half * g8.nodes[i]);
  v16 *= half;
  v8 *= half;
  return {v16, std::abs(v16 - v8)};
}

// Fixed-order accumulation of per-panel results (Kahan); identical for the
// serial and parallel paths.
IntegralEstimate accumulate(const std::vector<PanelResult>& results) {
  double sum = 0.0, comp = 0.0, err = 0.0;
  for (const PanelResult& pr : results) {
    double y = pr.value - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    err += pr.diff;
  }
  return {sum, err};
}

IntegralEstimate integrate_once(const std::function<double(double)>& f, double ua, double ub,
                                int base, Execution execution) {
  const GaussRule& g16 = gauss_legendre(16);
  const GaussRule& g8 = gauss_legendre(8);
  std::vector<double> bounds = panel_bounds(ua, ub, base);
  int panels = static_cast<int>(bounds.size()) - 1;
  std::vector<PanelResult> results(panels);
  if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < panels; ++i)
      results[i] = eval_panel(f, bounds[i], bounds[i + 1], g16, g8);
  } else {
    for (int i = 0; i < panels; ++i)
      results[i] = eval_panel(f, bounds[i], bounds[i + 1], g16, g8);
  }
  return accumulate(results);
}

}  // namespace

IntegralEstimate integrate_radial(const std::function<double(double)>& f, double r_lo,
                                  double r_hi, const QuadratureOptions& opts) {
  if (!(0.0 < r_lo && r_lo < r_hi))
    throw Error(ErrorKind::BadArguments, "integration requires 0 < r_lo < r_hi");
  double ua = std::log(r_lo), ub = std::log(r_hi);
  int base = std::max(opts.initial_panels, static_cast<int>(2.0 * (ub - ua)));
  IntegralEstimate est;
  for (int attempt = 0; attempt <= opts.max_doublings; ++attempt) {
    est = integrate_once(f, ua, ub, base, opts.execution);
    double target = opts.rel_tol * std::abs(est.value);
    if (est.error <= target || (est.value == 0.0 && est.error == 0.0)) return est;
    // A vanishing integral of a nonnegative integrand: accept tiny noise.
    if (std::abs(est.value) < 1e-280 && est.error < 1e-280) return est;
    base *= 2;
  }
  throw Error(ErrorKind::QuadratureFailure,
              "adaptive refinement did not meet the error target (value=" +
                  std::to_string(est.value) + ", error=" + std::to_string(est.error) + ")");
}

double integrate_radial_fixed_serial(const std::function<double(double)>& f, double r_lo,
                                     double r_hi, int base_panels) {
  return integrate_once(f, std::log(r_lo), std::log(r_hi), base_panels, Execution::Serial)
      .value;
}

double integrate_radial_fixed_parallel(const std::function<double(double)>& f, double r_lo,
                                       double r_hi, int base_panels) {
  return integrate_once(f, std::log(r_lo), std::log(r_hi), base_panels, Execution::Parallel)
      .value;
}

namespace {

double integer_power(double x, int e) {
  if (e < 0) return 1.0 / integer_power(x, -e);
  double r = 1.0, b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace

IntegralSet basis_integrals(const TestProfile& p, const std::vector<FormBasisElement>& elements,
                            const QuadratureOptions& opts) {
  IntegralSet out;
  const double n = p.dim;
  const double lambda = p.lambda();
  for (const FormBasisElement& elem : elements) {
    if (out.has(elem)) continue;
    auto integrand = [&, elem](double r) {
      Jet4 phi = p.jet(r);
      double base = integer_power(r, p.dim - 1 - elem.s);
      switch (elem.kind) {
        case FormKind::Val:
          return phi.d[0] * phi.d[0] * base;
        case FormKind::Eul:
          return r * r * phi.d[1] * phi.d[1] * base;
        case FormKind::Grad:
          return (phi.d[1] * phi.d[1] + lambda * phi.d[0] * phi.d[0] / (r * r)) * base;
        case FormKind::Lap2: {
          double lap = phi.d[2] + (n - 1) * phi.d[1] / r - lambda * phi.d[0] / (r * r);
          return lap * lap * integer_power(r, p.dim - 1);
        }
      }
      return 0.0;
    };
    IntegralEstimate est = integrate_radial(integrand, p.radial->lo(), p.radial->hi(), opts);
    out.set(elem, est.value, est.error);
  }
  return out;
}

double apply_radial_word(const OperatorKey& key, const Jet4& phi, double r, double n,
                         double lambda) {
  if (phi.valid < key.dpow + 2 * key.lpow)
    throw Error(ErrorKind::InsufficientDerivatives,
                "profile supplies too few derivatives for the operator word");
  Jet4 g = phi;
  for (int m = 0; m < key.lpow; ++m) {
    Jet4 next;
    next.valid = g.valid - 2;
    double r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
    next.d[0] = g.d[2] + (n - 1) * g.d[1] / r - lambda * g.d[0] / r2;
    if (next.valid >= 1)
      next.d[1] = g.d[3] + (n - 1) * (g.d[2] / r - g.d[1] / r2) -
                  lambda * (g.d[1] / r2 - 2.0 * g.d[0] / r3);
    if (next.valid >= 2)
      next.d[2] = g.d[4] + (n - 1) * (g.d[3] / r - 2.0 * g.d[2] / r2 + 2.0 * g.d[1] / r3) -
                  lambda * (g.d[2] / r2 - 4.0 * g.d[1] / r3 + 6.0 * g.d[0] / r4);
    g = next;
  }
  for (int k = 0; k < key.dpow; ++k) {
    Jet4 next;
    next.valid = g.valid - 1;
    next.d[0] = r * g.d[1];
    if (next.valid >= 1) next.d[1] = g.d[1] + r * g.d[2];
    if (next.valid >= 2) next.d[2] = 2.0 * g.d[2] + r * g.d[3];
    if (next.valid >= 3) next.d[3] = 3.0 * g.d[3] + r * g.d[4];
    g = next;
  }
  return g.d[0] * integer_power(r, -key.rpow);
}

IntegralEstimate direct_factor_quadrature(const OperatorExpr& op, const Bindings& bindings,
                                          const TestProfile& p, const QuadratureOptions& opts) {
  struct NumTerm {
    double coeff;
    OperatorKey key;
  };
  std::vector<NumTerm> terms;
  int max_order = 0;
  for (const auto& [k, c] : op.terms()) {
    terms.push_back({c.evaluate(bindings).to_double(), k});
    max_order = std::max(max_order, k.dpow + 2 * k.lpow);
  }
  if (max_order > 4)
    throw Error(ErrorKind::InsufficientDerivatives,
                "operator order exceeds the profile derivative budget");
  const double n = p.dim;
  const double lambda = p.lambda();
  auto integrand = [&, terms](double r) {
    Jet4 phi = p.jet(r);
    double af = 0.0;
    for (const NumTerm& t : terms) af += t.coeff * apply_radial_word(t.key, phi, r, n, lambda);
    return af * af * integer_power(r, p.dim - 1);
  };
  return integrate_radial(integrand, p.radial->lo(), p.radial->hi(), opts);
}

IntegralEstimate direct_vector_quadrature(const RadialFunction& g, const Bindings& bindings,
                                          double gamma_value, const TestProfile& p,
                                          const QuadratureOptions& opts) {
  RadialFunction bound = g.substitute(bindings);
  const double lambda = p.lambda();
  auto integrand = [&, bound](double r) {
    Jet4 phi = p.jet(r);
    double gv = bound.eval(r, Bindings{}, gamma_value);
    double radial = phi.d[1] + gv * r * phi.d[0];
    double v = radial * radial + lambda * phi.d[0] * phi.d[0] / (r * r);
    return v * integer_power(r, p.dim - 1);
  };
  return integrate_radial(integrand, p.radial->lo(), p.radial->hi(), opts);
}

IntegralEstimate weighted_value_integral(const RadialFunction& w, const Bindings& bindings,
                                         double gamma_value, const TestProfile& p,
                                         const QuadratureOptions& opts) {
  RadialFunction bound = w.substitute(bindings);
  auto integrand = [&, bound](double r) {
    Jet4 phi = p.jet(r);
    return bound.eval(r, Bindings{}, gamma_value) * phi.d[0] * phi.d[0] *
           integer_power(r, p.dim - 1);
  };
  return integrate_radial(integrand, p.radial->lo(), p.radial->hi(), opts);
}

}  // namespace rellich
