#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rellich/polynomial.hpp"
#include "rellich/rational.hpp"

namespace rellich {

// Dense univariate polynomial over Rational; coefficient i belongs to x^i.
// Normalized: no trailing zero coefficients (zero polynomial = empty vector).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(Rational c);
  // Requires p univariate in `s` (other symbols already bound).
  static UniPoly from_param(const ParamPolynomial& p, Symbol s);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return eval(x).sign(); }
  // Sign of p(x) as x -> +inf (dir > 0) or -inf (dir < 0).
  int sign_at_infinity(int dir) const;

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const Rational& k) const;
  UniPoly monic() const;
  UniPoly derivative() const;

  // Euclidean division; divisor must be nonzero.
  struct DivMod { UniPoly quotient, remainder; };
  DivMod divmod(const UniPoly& divisor) const;
  UniPoly remainder(const UniPoly& divisor) const { return divmod(divisor).remainder; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

// Monic gcd.
UniPoly gcd(UniPoly a, UniPoly b);

// Yun square-free decomposition: returns pairs (factor, multiplicity) with
// factors monic, square-free, pairwise coprime, multiplicities increasing.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

// Resultant of a(x) and b(x) via the Sylvester matrix.
Rational resultant(const UniPoly& a, const UniPoly& b);

// Sturm chain of p (p must be nonzero).
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p);
  // Distinct roots of the square-free part in (a, b]; nullopt = +/-infinity.
  int count_roots(const std::optional<Rational>& a, const std::optional<Rational>& b) const;

 private:
  int variations_at(const std::optional<Rational>& x, int dir) const;
  std::vector<UniPoly> chain_;
};

// One isolated real root: `factor` is the square-free factor it solves,
// [lo, hi] brackets exactly that root. `exact` means lo == hi == the root.
struct RootInterval {
  UniPoly factor;
  Rational lo, hi;
  int multiplicity = 1;
  bool exact = false;

  // Shrink the bracket below `width` by bisection (no-op when exact).
  void refine_to_width(const Rational& width);
  double midpoint_double() const { return ((lo + hi) / Rational(2)).to_double(); }
};

// Ordered isolating intervals with multiplicity for all real roots of p in
// (lo, hi]; endpoints nullopt mean -inf / +inf. Throws ZeroPolynomial for
// the zero polynomial.
std::vector<RootInterval> isolate_real_roots(
    const UniPoly& p,
    const std::optional<Rational>& lo = std::nullopt,
    const std::optional<Rational>& hi = std::nullopt);

// Convenience overload matching the symbolic layer: p univariate in `s`.
std::vector<RootInterval> isolate_real_roots(
    const ParamPolynomial& p, Symbol s,
    const std::optional<Rational>& lo = std::nullopt,
    const std::optional<Rational>& hi = std::nullopt);

// The unique rational with smallest denominator in [lo, hi].
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

// Exact square root when q is a perfect square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

}  // namespace rellich
