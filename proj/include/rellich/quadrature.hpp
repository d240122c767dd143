#pragma once

#include <functional>
#include <vector>

#include "rellich/form_reduction.hpp"
#include "rellich/operator_algebra.hpp"
#include "rellich/profiles.hpp"
#include "rellich/radial_function.hpp"

namespace rellich {

// Gauss-Legendre rule on [-1, 1]; nodes and weights computed once by Newton
// iteration on the Legendre recurrence and cached per order.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

enum class Execution { Serial, Parallel };

struct QuadratureOptions {
  double rel_tol = 1e-11;    // error-estimate target relative to the value
  int initial_panels = 32;   // base panel count in the log variable
  int max_doublings = 6;     // adaptive refinement budget
  Execution execution = Execution::Parallel;
};

struct IntegralEstimate {
  double value = 0.0;
  double error = 0.0;  // embedded-pair estimate (order 16 vs order 8)
};

// ∫ f(r) dr over [r_lo, r_hi], 0 < r_lo < r_hi, integrated in u = ln r on a
// composite order-16 mesh with dyadic grading toward both endpoints. Panel
// evaluations run under OpenMP when requested; panel sums are accumulated in
// a fixed order either way, so serial and parallel results are bit-identical.
// Raises QuadratureFailure when the error target is unmet at full depth.
IntegralEstimate integrate_radial(const std::function<double(double)>& f, double r_lo,
                                  double r_hi, const QuadratureOptions& opts = {});

// Serial reference used for testing and benchmarking: a plain accumulation
// loop over the identical mesh, no adaptivity (panel count fixed by caller).
double integrate_radial_fixed_serial(const std::function<double(double)>& f, double r_lo,
                                     double r_hi, int base_panels);
// OpenMP counterpart over the identical mesh; same fixed panel count.
double integrate_radial_fixed_parallel(const std::function<double(double)>& f, double r_lo,
                                       double r_hi, int base_panels);

// Numeric basis integrals of a test profile via the radial reduction with
// f = φ(r)·Y_ℓ(ω), ∫|Y_ℓ|² = 1, λ = ℓ(ℓ+n-2):
//   Val(s)  = ∫ φ² r^(n-1-s)
//   Eul(s)  = ∫ r² φ'² r^(n-1-s)
//   Grad(s) = ∫ (φ'² + λ φ²/r²) r^(n-1-s)
//   Lap2    = ∫ (φ'' + (n-1)φ'/r - λφ/r²)² r^(n-1)
IntegralSet basis_integrals(const TestProfile& p, const std::vector<FormBasisElement>& elements,
                            const QuadratureOptions& opts = {});

// ∫ (A f)² for a scalar operator with every coefficient symbol bound.
IntegralEstimate direct_factor_quadrature(const OperatorExpr& op, const Bindings& bindings,
                                          const TestProfile& p,
                                          const QuadratureOptions& opts = {});

// ∫ |T_g f|² = ∫ [(φ' + g·r·φ)² + λφ²/r²] r^(n-1) for a vector factor with
// radial multiplier g.
IntegralEstimate direct_vector_quadrature(const RadialFunction& g, const Bindings& bindings,
                                          double gamma_value, const TestProfile& p,
                                          const QuadratureOptions& opts = {});

// ∫ w(r) φ² r^(n-1) against an arbitrary radial weight.
IntegralEstimate weighted_value_integral(const RadialFunction& w, const Bindings& bindings,
                                         double gamma_value, const TestProfile& p,
                                         const QuadratureOptions& opts = {});

// Applies the radial part of a normal-ordered word to the profile jet at r.
// Consumes one derivative order per Euler factor and two per Laplacian;
// raises InsufficientDerivatives if the profile cannot supply them.
double apply_radial_word(const OperatorKey& key, const Jet4& phi, double r, double n,
                         double lambda);

}  // namespace rellich
