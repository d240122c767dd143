#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rellich/polynomial.hpp"

namespace rellich {

// Canonical shape of a normal-ordered word: r^(-s) · D^k · Δ^m with the
// weight on the left, Euler operator D = x·∇ in the middle, Laplacian on
// the right.
struct OperatorKey {
  int rpow = 0;  // s in r^(-s), >= 0
  int dpow = 0;  // power of D
  int lpow = 0;  // power of Δ

  auto operator<=>(const OperatorKey&) const = default;
};

// Normal-ordered operator expression: canonical map from word shape to a
// nonzero polynomial coefficient. Equality is map identity.
class OperatorExpr {
 public:
  using TermMap = std::map<OperatorKey, ParamPolynomial>;

  OperatorExpr() = default;

  static OperatorExpr term(ParamPolynomial coeff, int rpow, int dpow, int lpow);
  static OperatorExpr identity() { return term(ParamPolynomial(1), 0, 0, 0); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  ParamPolynomial coefficient(const OperatorKey& k) const;

  OperatorExpr operator-() const;
  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  OperatorExpr scaled(const ParamPolynomial& c) const;

  friend bool operator==(const OperatorExpr& a, const OperatorExpr& b) {
    return a.terms_ == b.terms_;
  }

  // Paper-style rendering, e.g. "-Δ + α*|x|^-2 x·∇ + β*|x|^-2".
  std::string to_string() const;

  void add_term(const OperatorKey& k, const ParamPolynomial& c);

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const OperatorExpr& op);

// Named operator families.
//   T_{α,β}   = -Δ + α r^-2 D + β r^-2
//   T̃_α      = r^-1 D + α r^-1
OperatorExpr make_t_alpha_beta();
OperatorExpr make_laplacian();
OperatorExpr make_euler();
OperatorExpr make_weight(int s);
OperatorExpr make_tilde_t_alpha();
// Custom term list; rejects negative word exponents.
OperatorExpr make_custom(
    const std::vector<std::tuple<ParamPolynomial, int, int, int>>& terms);

// Formal L²(Rⁿ) adjoint under vanishing boundary terms: Δ⁺ = Δ,
// (r^-s)⁺ = r^-s, D⁺ = -D - n, words reversed, then normal ordering.
OperatorExpr adjoint(const OperatorExpr& a);

// Order of redex reduction during normal ordering. All choices produce the
// identical canonical result; the knob exists so tests can exercise
// confluence.
struct RewriteStrategy {
  enum class Pick { First, Last, Random } pick = Pick::First;
  uint64_t seed = 0;
};

// Normal-ordered product A∘B via the rewrite rules
//   (R1) D·r^-s  -> r^-s·D - s·r^-s
//   (R2) Δ·r^-s  -> r^-s·Δ - 2s·r^-s-2·D + s(s+2-n)·r^-s-2
//   (R3) Δ·D     -> D·Δ + 2Δ
OperatorExpr compose(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr compose(const OperatorExpr& a, const OperatorExpr& b,
                     const RewriteStrategy& strategy);

// Substitute bindings into every coefficient; zero terms dropped.
OperatorExpr specialize(const OperatorExpr& a, const Bindings& b);

// One-dimensional view of an operator: x^(-s) d^k/dx^k terms obtained by
// substituting D = x d/dx and Δ = d²/dx². Meaningful for the n = 1
// (half-line) instantiation.
struct OneDimKey {
  int xpow = 0;   // s in x^(-s); may be negative (positive powers of x)
  int order = 0;  // derivative order

  auto operator<=>(const OneDimKey&) const = default;
};

class OneDimOperator {
 public:
  using TermMap = std::map<OneDimKey, ParamPolynomial>;

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  void add_term(const OneDimKey& k, const ParamPolynomial& c);

  friend bool operator==(const OneDimOperator& a, const OneDimOperator& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  TermMap terms_;
};

OneDimOperator to_one_dim(const OperatorExpr& a);

}  // namespace rellich
