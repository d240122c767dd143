#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rellich/rational.hpp"
#include "rellich/symbols.hpp"

namespace rellich {

// Exponent vector over the fixed symbol set.
struct Monomial {
  std::array<uint8_t, kNumSymbols> exp{};

  int total_degree() const;
  bool is_constant() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

// Graded lexicographic order: compare total degree first, then exponents in
// symbol order. Higher-degree monomials sort first so rendering leads with
// the dominant term.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Multivariate polynomial over Rational in the fixed symbols. Canonical by
// representation: the term map never stores zero coefficients, so equality
// is map identity.
class ParamPolynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

  // Total-degree cap; arithmetic exceeding it reports DegreeOverflow.
  static constexpr int kMaxTotalDegree = 64;

  ParamPolynomial() = default;
  ParamPolynomial(Rational c);  // NOLINT: constants convert implicitly
  ParamPolynomial(long long c) : ParamPolynomial(Rational(c)) {}

  static ParamPolynomial variable(Symbol s);
  static ParamPolynomial term(Rational coeff, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires is_constant().
  Rational constant_value() const;

  int total_degree() const;
  int degree_in(Symbol s) const;
  // True when no monomial mentions any symbol outside `s`.
  bool is_univariate_in(Symbol s) const;

  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  ParamPolynomial operator-() const;
  ParamPolynomial& operator+=(const ParamPolynomial& o);
  ParamPolynomial& operator-=(const ParamPolynomial& o);
  ParamPolynomial operator*(const ParamPolynomial& o) const;
  ParamPolynomial& operator*=(const ParamPolynomial& o) { return *this = *this * o; }
  ParamPolynomial pow(int e) const;  // e >= 0

  friend ParamPolynomial operator+(ParamPolynomial a, const ParamPolynomial& b) { return a += b; }
  friend ParamPolynomial operator-(ParamPolynomial a, const ParamPolynomial& b) { return a -= b; }
  friend bool operator==(const ParamPolynomial& a, const ParamPolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const ParamPolynomial& a, const ParamPolynomial& b) {
    return !(a == b);
  }
  // Total order compatible with the canonical term order; used as a map key.
  friend bool operator<(const ParamPolynomial& a, const ParamPolynomial& b);

  // Substitute the bound symbols; result lives in the remaining ones.
  ParamPolynomial substitute(const Bindings& b) const;
  // Replace every occurrence of `s` by a polynomial.
  ParamPolynomial substitute_symbol(Symbol s, const ParamPolynomial& value) const;
  // Requires every mentioned symbol bound.
  Rational evaluate(const Bindings& b) const;

  ParamPolynomial derivative(Symbol s) const;

  // Coefficients of the polynomial viewed as univariate in `s`, constant
  // otherwise (requires is_univariate_in(s)); index = power of s.
  std::vector<Rational> univariate_coefficients(Symbol s) const;

  // Deterministic rendering, e.g. "(n - 4)*α - 2*β".
  std::string to_string() const;

 private:
  void insert_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const ParamPolynomial& p);

// Arithmetic tree over symbols, rational constants, +, -, *, and integer
// powers; canonicalized into a ParamPolynomial. Node handles are cheap
// value types sharing immutable subtrees.
class PolyExpr {
 public:
  struct Node;

  static PolyExpr constant(Rational c);
  static PolyExpr variable(Symbol s);

  friend PolyExpr operator+(const PolyExpr& a, const PolyExpr& b);
  friend PolyExpr operator-(const PolyExpr& a, const PolyExpr& b);
  friend PolyExpr operator*(const PolyExpr& a, const PolyExpr& b);
  PolyExpr operator-() const;
  PolyExpr pow(int e) const;  // e >= 0

  // Expands through ring axioms; identical trees up to associativity,
  // commutativity, and distributivity map to the identical value.
  ParamPolynomial canonicalize() const;

 private:
  explicit PolyExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

ParamPolynomial poly_canonicalize(const PolyExpr& expr);

}  // namespace rellich
