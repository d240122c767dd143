#pragma once

#include <optional>
#include <string>
#include <variant>

#include "rellich/univariate.hpp"

namespace rellich {

// Real algebraic number carried exactly as (minimal polynomial, isolating
// interval). The minimal polynomial is monic and irreducible over Q of
// degree >= 2 (degree-1 cases collapse to Rational in ExactValue); the
// interval has rational endpoints with a sign change and contains exactly
// one root of the minimal polynomial.
class AlgebraicNumber {
 public:
  AlgebraicNumber(UniPoly minpoly, Rational lo, Rational hi);

  const UniPoly& minpoly() const { return minpoly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  void refine_to_width(const Rational& width);
  // Exact sign comparison against a rational.
  int compare(const Rational& r) const;
  // Exact comparison; uses root indexing when minimal polynomials coincide.
  int compare(const AlgebraicNumber& other) const;

  double to_double() const;
  // Decimal truncation with `digits` fractional digits, refined until the
  // bracket pins every printed digit.
  std::string to_decimal_string(int digits) const;
  // "root of <poly> in [lo, hi]"
  std::string to_string(const std::string& var = "x") const;

 private:
  UniPoly minpoly_;
  Rational lo_, hi_;
};

// Exact scalar: rational or algebraic.
class ExactValue {
 public:
  ExactValue(Rational r) : v_(std::move(r)) {}  // NOLINT
  ExactValue(AlgebraicNumber a) : v_(std::move(a)) {}  // NOLINT

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  const AlgebraicNumber& algebraic() const { return std::get<AlgebraicNumber>(v_); }

  int compare(const ExactValue& other) const;
  bool operator==(const ExactValue& o) const { return compare(o) == 0; }
  bool operator<(const ExactValue& o) const { return compare(o) < 0; }

  double to_double() const;
  std::string to_decimal_string(int digits) const;
  std::string to_string(const std::string& var = "x") const;

 private:
  std::variant<Rational, AlgebraicNumber> v_;
};

// Exact value of the single root of `factor` (square-free) bracketed by
// `interval`: a Rational when the root is rational, otherwise an
// AlgebraicNumber with a proper minimal polynomial. Supports minimal
// polynomial extraction up to degree 3 after removal of rational roots.
ExactValue exact_root(const RootInterval& interval);

// F evaluated at x = v, exactly. For algebraic v the result is obtained by
// polynomial remainder mod the minimal polynomial; non-constant remainders
// are resolved through a resultant, so the result is again an ExactValue.
ExactValue eval_at(const UniPoly& f, const ExactValue& v);

}  // namespace rellich
