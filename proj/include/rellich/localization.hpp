#pragma once

#include <string>
#include <vector>

#include "rellich/profiles.hpp"
#include "rellich/quadrature.hpp"
#include "rellich/rational.hpp"

namespace rellich {

using Point = std::vector<double>;

// Lattice-style partition of unity: base bump φ = 1 on B(0,1/2), 0 outside
// B(0,1), normalized per center so that Σ_j φ_j² = 1 on the working region
// (the convex hull of the centers inflated by 1/2).
class BumpPartition {
 public:
  // Validates positive pairwise distances and the covering condition
  // Σ φ(x-x_j)² >= 1/2 on a sample grid of the working region
  // (CoveringViolation names the failing point).
  BumpPartition(std::vector<Point> centers, int dim, int covering_samples_per_axis = 9);

  int dim() const { return dim_; }
  size_t size() const { return centers_.size(); }
  const std::vector<Point>& centers() const { return centers_; }

  // φ_j and its first and second derivatives assembled through the
  // normalization chain rule.
  struct Eval {
    double value = 0.0;
    std::vector<double> gradient;
    double laplacian = 0.0;
  };
  Eval evaluate(size_t j, const Point& x) const;

  // Σ_j φ_j(x)², Σ_j |∇φ_j|², Σ_j (Δφ_j)² at a point.
  struct Sums {
    double square_sum = 0.0;
    double grad_sum = 0.0;
    double lap_sum = 0.0;
  };
  Sums sums_at(const Point& x) const;

  bool in_working_region(const Point& x, double tolerance = 1e-9) const;
  // Axis-aligned box enclosing the working region.
  std::pair<Point, Point> bounding_box() const;

 private:
  std::vector<Point> centers_;
  int dim_;
};

// Deterministic sample grid over the working region (box grid filtered by
// hull distance).
std::vector<Point> region_grid(const BumpPartition& partition, int per_axis);

struct PartitionFunctionals {
  double sup_grad_sum = 0.0;      // sup Σ |∇φ_j|²
  double sup_lap_sum = 0.0;       // sup Σ (Δφ_j)²
  double max_square_defect = 0.0; // sup |Σ φ_j² - 1|
  size_t samples = 0;
};

// Grid sups of the localization functionals; sample sweeps run under OpenMP
// with order-independent max-reductions.
PartitionFunctionals partition_functionals(const BumpPartition& partition,
                                           const std::vector<Point>& grid,
                                           Execution execution = Execution::Parallel);

// Constant bookkeeping of the abstract localization bound: inputs
// (a, b, c, d, e) produce (a·c·d, a·c·e + b·c).
struct MorganLedger {
  Rational a, b, c, d, e;
};

struct MorganResult {
  Rational form_bound;  // a·c·d
  Rational offset;      // a·c·e + b·c
  bool strictly_less_than_one = false;
};

MorganResult morgan_ledger(const MorganLedger& ledger);

// Multi-center strongly singular potential
//   W₀(x) = Σ_j γ_j |x-x_j|^-4 e^(-δ|x-x_j|),
// admissible when |γ_j| <= γ < [n(n-4)/4]².
class SingularPotentialW0 {
 public:
  SingularPotentialW0(std::vector<Point> centers, std::vector<double> couplings,
                      double gamma_bound, double decay, int dim);

  double operator()(const Point& x) const;  // SingularEvaluation at a center
  int dim() const { return dim_; }
  double gamma_bound() const { return gamma_; }
  double decay() const { return delta_; }
  const std::vector<Point>& centers() const { return centers_; }
  const std::vector<double>& couplings() const { return couplings_; }

 private:
  std::vector<Point> centers_;
  std::vector<double> couplings_;
  double gamma_;
  double delta_;
  int dim_;
};

// Desk-scale form-bound check around a lone singularity: evaluates
// ∫ W₀ f² against (γ/Rellich constant)·∫(Δf)² + b·∫f² over radial profiles
// and reports the fitted offset b (max deficit, clamped at 0).
struct FormBoundCheck {
  double leading_coefficient = 0.0;  // γ / [n(n-4)/4]²
  double fitted_offset = 0.0;
  bool leading_below_one = false;
};

FormBoundCheck w0_form_bound_check(const SingularPotentialW0& w0,
                                   const std::vector<TestProfile>& profiles,
                                   const QuadratureOptions& opts = {});

}  // namespace rellich
