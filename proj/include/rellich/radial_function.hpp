#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "rellich/polynomial.hpp"

namespace rellich {

// Monomial r^p · Π_k L_k^{q_k} in the iterated logarithms
//   L_1(r) = -ln(r/γ),  L_{k+1}(r) = ln(L_k(r)),
// with γ a formal positive scale. Exponents may be negative; trailing zero
// log exponents are trimmed so keys are canonical.
struct LogMonomialKey {
  int rpow = 0;            // power of r (any sign)
  std::vector<int> logpow; // exponent of L_k at index k-1

  auto operator<=>(const LogMonomialKey&) const = default;
};

// Finite sum of log-monomials with polynomial coefficients; exactly closed
// under d/dr.
class RadialFunction {
 public:
  using TermMap = std::map<LogMonomialKey, ParamPolynomial>;

  RadialFunction() = default;

  static RadialFunction monomial(ParamPolynomial coeff, int rpow,
                                 std::vector<int> logpow = {});

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  void add(LogMonomialKey key, const ParamPolynomial& c);

  RadialFunction operator-() const;
  RadialFunction& operator+=(const RadialFunction& o);
  RadialFunction& operator-=(const RadialFunction& o);
  RadialFunction operator*(const RadialFunction& o) const;
  friend RadialFunction operator+(RadialFunction a, const RadialFunction& b) { return a += b; }
  friend RadialFunction operator-(RadialFunction a, const RadialFunction& b) { return a -= b; }
  RadialFunction scaled(const ParamPolynomial& c) const;
  RadialFunction times_r_power(int k) const;

  friend bool operator==(const RadialFunction& a, const RadialFunction& b) {
    return a.terms_ == b.terms_;
  }

  // Exact d/dr within the log-monomial algebra.
  RadialFunction derivative() const;

  RadialFunction substitute(const Bindings& b) const;

  // Numeric evaluation at radius r with coefficient symbols bound and the
  // scale γ given numerically; requires 0 < r and every needed L_k > 0.
  double eval(double r, const Bindings& bindings, double gamma_value) const;

  // Iterated-log notation, e.g. "-1/4·(n^2 - 4*n + 4)·r^-2·L1^-2".
  std::string to_string() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const RadialFunction& f);

// Vector-valued factor T_g = ∇ + g(r)·(x - y); the center y is bookkeeping
// only (all radial algebra is carried out in centered coordinates).
struct VectorFactor {
  RadialFunction g;
  std::string center_label = "0";
};

// Radial multiplier of the iterated-log family: for m >= 1
//   g_m = 2^-1 r^-2 [ (n-2) + Σ_{j=1..m} Π_{k<=j} L_k^-1 - α_m Π_{k<=m} L_k^-1 ]
// and for m = 0: g_0 = 2^-1 (n - 2 - α_0) r^-2.
VectorFactor iterated_log_multiplier(int m);

// Potential V with adjoint(T_g)∘T_g = -Δ + V, computed exactly via
// V = g²r² - n·g - r·g′. `dim` defaults to the formal symbol n.
RadialFunction potential_of_factor(
    const VectorFactor& factor,
    const ParamPolynomial& dim = ParamPolynomial::variable(Symbol::Dim));

// Weight of the iterated-log Hardy inequality:
//   4^-1 r^-2 [ (n-2)² + Σ_{j=1..m} Π_{k<=j} L_k^-2 ]   (empty sum = 0).
RadialFunction log_hardy_weight(int m);

}  // namespace rellich
