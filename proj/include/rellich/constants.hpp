#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rellich/algebraic.hpp"
#include "rellich/polynomial.hpp"

namespace rellich {

enum class FamilyName {
  Rellich,        // β = α(n-α)/2 in the relaxed form; Val(4) coefficient
  GradH,          // β = (n-4)(α-2), Cauchy on the Eul term; Grad(2) coefficient
  GradF,          // β = 0; Grad(2) coefficient
  EulerK,         // β = (n-4)(α-2), Cauchy on the Grad term; Eul(4) coefficient
  Schmincke,      // β-substitution of the one-parameter interpolation family
  Halfline,       // n = 1 Val(4) coefficient after β = (α-α²)/2
  Hardy,          // first-order factorization Val(2) coefficient
  ImprovedHardy,  // scalar radial factorization Val(2) coefficient
};

const char* family_label(FamilyName f);
std::optional<FamilyName> family_from_label(const std::string& label);

// Closed interval with optional infinite ends.
struct ConstraintInterval {
  std::optional<Rational> lo, hi;
  bool contains(const ExactValue& x) const;
  std::string to_string() const;
};

// Objective (univariate in α once n is bound) plus the α-constraint set the
// derivation imposes.
struct InequalityFamily {
  FamilyName name;
  ParamPolynomial objective;  // polynomial in (n, α), degree <= 4 in α
  std::vector<ConstraintInterval> constraint;
  bool depends_on_dim = true;
};

// Family objectives are assembled through the operator/form pipeline (adjoint,
// composition, reduction, Cauchy relaxation, β-substitution), not typed in.
InequalityFamily make_family(FamilyName name);

struct Maximizer {
  ExactValue point;
  bool boundary_attained = false;
};

struct OptimizationResult {
  std::vector<Maximizer> maximizers;  // ties reported in full, ascending
  ExactValue max_value;
  bool boundary_attained = false;  // true when every maximizer is a boundary point
};

// Exact global maximum of the family objective over its constraint set for
// dimension n. UnboundedObjective when the supremum is +inf.
OptimizationResult optimize_family(const InequalityFamily& family, const Rational& n);

// The s <-> α correspondence of the one-parameter interpolation family, with
// the two inequality coefficients (gradient term, value term). Every call
// re-verifies the coefficients against the relaxed two-parameter form.
struct SchminckeResult {
  Rational s;
  Rational grad_coefficient;  // -s
  Rational val_coefficient;   // ((n-4)/4)² (4s + n²)
  std::optional<Rational> beta;   // set when derived from α
  std::vector<ExactValue> alpha;  // the matching α (both branches when s given)
};

SchminckeResult schmincke_from_alpha(const Rational& alpha, const Rational& n);
SchminckeResult schmincke_from_s(const Rational& s, const Rational& n);

}  // namespace rellich
