#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "rellich/operator_algebra.hpp"
#include "rellich/polynomial.hpp"

namespace rellich {

// Canonical basis of weighted integrals:
//   Lap2     ∫ (Δf)²
//   Grad(s)  ∫ r^-s |∇f|²
//   Eul(s)   ∫ r^-s (x·∇f)²
//   Val(s)   ∫ r^-s f²
enum class FormKind : uint8_t { Lap2 = 0, Grad, Eul, Val };

struct FormBasisElement {
  FormKind kind = FormKind::Lap2;
  int s = 0;  // weight exponent; 0 for Lap2

  static FormBasisElement lap2() { return {FormKind::Lap2, 0}; }
  static FormBasisElement grad(int s) { return {FormKind::Grad, s}; }
  static FormBasisElement eul(int s) { return {FormKind::Eul, s}; }
  static FormBasisElement val(int s) { return {FormKind::Val, s}; }

  auto operator<=>(const FormBasisElement&) const = default;
  std::string to_string() const;
};

// Linear combination of basis integrals with polynomial coefficients;
// canonical: no zero coefficients, ordered Lap2 < Grad < Eul < Val with s
// ascending within a kind.
class QuadraticForm {
 public:
  using TermMap = std::map<FormBasisElement, ParamPolynomial>;

  QuadraticForm() = default;

  bool is_zero() const { return coeffs_.empty(); }
  const TermMap& coefficients() const { return coeffs_; }
  ParamPolynomial coefficient(const FormBasisElement& b) const;
  void add(const FormBasisElement& b, const ParamPolynomial& c);

  QuadraticForm operator-() const;
  QuadraticForm& operator+=(const QuadraticForm& o);
  QuadraticForm& operator-=(const QuadraticForm& o);
  friend QuadraticForm operator+(QuadraticForm a, const QuadraticForm& b) { return a += b; }
  friend QuadraticForm operator-(QuadraticForm a, const QuadraticForm& b) { return a -= b; }
  QuadraticForm scaled(const ParamPolynomial& c) const;
  QuadraticForm substitute(const Bindings& b) const;

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // ⟨f, Af⟩-style rendering: "∫(Δf)² - (…)·∫|x|^-2|∇f|² + …".
  std::string to_string() const;
  // Rendering as an inequality with all non-Lap2 terms transposed:
  // "∫(Δf)² ≥ (…)·∫|x|^-2|∇f|² + …". Requires a Lap2 term with coefficient 1.
  std::string to_inequality_string() const;

 private:
  TermMap coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QuadraticForm& q);

enum class ReduceMode {
  Symbolic,  // dimension n stays a symbol
  OneDim,    // half-line: n bound to 1, Eul(s) canonicalized to Grad(s-2)
};

// Reduce ⟨f, Af⟩ to the canonical basis using the integration-by-parts
// rules (B1)-(B5); f is assumed real-valued with compact support away from
// the origin. Terms outside the reducible shapes raise IrreducibleTerm.
QuadraticForm reduce_to_form(const OperatorExpr& a, ReduceMode mode = ReduceMode::Symbolic);

enum class RelaxDirection { EulToGrad, GradToEul };

// Result of a Cauchy relaxation step |x·∇f|² <= |x|²|∇f|².
struct RelaxResult {
  QuadraticForm form;
  // Sufficient sign condition under which the relaxed form dominates the
  // original (recorded, not verified).
  ParamPolynomial condition_nonnegative;
  std::string condition;
};

// Move the Eul(s+2) coefficient onto Grad(s) (or conversely). `s` is the
// Grad weight. Missing source element raises RelaxTargetAbsent.
RelaxResult cauchy_relax(const QuadraticForm& q, RelaxDirection direction, int s);

// Numeric basis values with quadrature error estimates, keyed by basis
// element. Filled by the quadrature engine.
class IntegralSet {
 public:
  void set(const FormBasisElement& b, double value, double error) {
    values_[b] = {value, error};
  }
  bool has(const FormBasisElement& b) const { return values_.count(b) > 0; }
  double value(const FormBasisElement& b) const;
  double error(const FormBasisElement& b) const;
  const std::map<FormBasisElement, std::pair<double, double>>& entries() const {
    return values_;
  }

 private:
  std::map<FormBasisElement, std::pair<double, double>> values_;
};

// Σ coefficient × integral with compensated summation; all symbols must be
// bound and all basis values present.
double evaluate_form(const QuadraticForm& q, const Bindings& b, const IntegralSet& integrals);

}  // namespace rellich
