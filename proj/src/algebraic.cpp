#include "rellich/algebraic.hpp"

#include "rellich/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace rellich {

namespace {

// Primitive integer-coefficient version of p (content removed, positive lead).
std::vector<BigInt> primitive_integer_coeffs(const UniPoly& p) {
  BigInt den_lcm = 1;
  for (const auto& c : p.coefficients()) {
    BigInt d = c.denominator();
    den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
  }
  std::vector<BigInt> ints;
  ints.reserve(p.coefficients().size());
  BigInt content = 0;
  for (const auto& c : p.coefficients()) {
    BigInt v = c.numerator() * (den_lcm / c.denominator());
    ints.push_back(v);
    content = boost::multiprecision::gcd(content, boost::multiprecision::abs(v));
  }
  if (content == 0) content = 1;
  for (auto& v : ints) v /= content;
  if (ints.back() < 0)
    for (auto& v : ints) v = -v;
  return ints;
}

// The root of `ri` when it is rational. Uses the denominator bound from the
// rational root theorem plus the simplest-rational search.
std::optional<Rational> rational_root_of(RootInterval ri) {
  const auto ints = primitive_integer_coeffs(ri.factor);
  BigInt den_bound = boost::multiprecision::abs(ints.back());
  // Once the bracket is narrower than 1/(2 D^2) it contains at most one
  // rational with denominator <= D.
  Rational width(BigInt(1), 2 * den_bound * den_bound);
  ri.refine_to_width(width);
  if (ri.exact) return ri.lo;
  Rational candidate = simplest_rational_in(ri.lo, ri.hi);
  if (candidate.denominator() <= den_bound && ri.factor.eval(candidate).is_zero())
    return candidate;
  return std::nullopt;
}

// Irreducible monic factor of the square-free `f` vanishing at the root in
// [lo, hi], for deg(f) <= 3 once rational roots are removed.
UniPoly minimal_polynomial(const UniPoly& f, Rational& lo, Rational& hi) {
  UniPoly g = f.monic();
  // Strip every rational root of g.
  for (auto& ri : isolate_real_roots(g)) {
    if (auto r = rational_root_of(ri)) {
      UniPoly linear(std::vector<Rational>{-*r, Rational(1)});
      g = g.divmod(linear).quotient;
    }
  }
  if (g.degree() < 2)
    throw Error(ErrorKind::BadArguments, "root was rational; no minimal polynomial of degree >= 2");
  if (g.degree() > 3)
    throw Error(ErrorKind::BadArguments,
                "minimal polynomial extraction not supported beyond degree 3");
  // Degree 2 with no rational root or degree 3 with no rational root:
  // irreducible over Q.
  // Shrink [lo, hi] until it isolates the root within g.
  SturmChain chain(g);
  RootInterval ri{f, lo, hi, 1, false};
  while (chain.count_roots(lo, hi) != 1 || g.sign_at(lo) == 0 || g.sign_at(hi) == 0 ||
         g.sign_at(lo) * g.sign_at(hi) > 0) {
    ri.refine_to_width((ri.hi - ri.lo) / Rational(4));
    lo = ri.lo;
    hi = ri.hi;
    if (ri.exact)
      throw Error(ErrorKind::BadArguments, "unexpected rational root during isolation");
  }
  return g;
}

// Conservative interval Horner evaluation: image bounds of f over [lo, hi].
std::pair<Rational, Rational> interval_eval(const UniPoly& f, const Rational& lo,
                                            const Rational& hi) {
  Rational alo(0), ahi(0);
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    Rational p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
    Rational mn = min(min(p1, p2), min(p3, p4));
    Rational mx = max(max(p1, p2), max(p3, p4));
    alo = mn + *it;
    ahi = mx + *it;
  }
  return {alo, ahi};
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(UniPoly minpoly, Rational lo, Rational hi)
    : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (minpoly_.degree() < 2)
    throw Error(ErrorKind::BadArguments, "algebraic number with degree < 2 minimal polynomial");
}

void AlgebraicNumber::refine_to_width(const Rational& width) {
  RootInterval ri{minpoly_, lo_, hi_, 1, false};
  ri.refine_to_width(width);
  if (ri.exact)
    throw Error(ErrorKind::BadArguments, "irreducible minimal polynomial hit a rational root");
  lo_ = ri.lo;
  hi_ = ri.hi;
}

int AlgebraicNumber::compare(const Rational& r) const {
  if (r < lo_) return +1;
  if (hi_ < r) return -1;
  // r sits inside the bracket. The minimal polynomial has no rational root,
  // so its sign at r is nonzero, and with a single simple root in the
  // bracket the sign marks the side.
  return minpoly_.sign_at(r) == minpoly_.sign_at(lo_) ? +1 : -1;
}

int AlgebraicNumber::compare(const AlgebraicNumber& other) const {
  if (minpoly_ == other.minpoly_) {
    // Same irreducible polynomial: compare root indices.
    auto roots = isolate_real_roots(minpoly_);
    auto locate = [&](const AlgebraicNumber& a) -> size_t {
      AlgebraicNumber x = a;
      while (true) {
        for (size_t i = 0; i < roots.size(); ++i) {
          if (roots[i].lo <= x.lo_ && x.hi_ <= roots[i].hi) return i;
        }
        x.refine_to_width((x.hi_ - x.lo_) / Rational(4));
      }
    };
    size_t ia = locate(*this), ib = locate(other);
    return ia < ib ? -1 : (ia == ib ? 0 : +1);
  }
  // Distinct minimal polynomials imply distinct values; refine to separate.
  AlgebraicNumber a = *this, b = other;
  while (true) {
    if (a.hi_ < b.lo_) return -1;
    if (b.hi_ < a.lo_) return +1;
    a.refine_to_width((a.hi_ - a.lo_) / Rational(4));
    b.refine_to_width((b.hi_ - b.lo_) / Rational(4));
  }
}

double AlgebraicNumber::to_double() const {
  AlgebraicNumber self = *this;
  self.refine_to_width(Rational(1, 1000000000000000000LL));
  return ((self.lo_ + self.hi_) / Rational(2)).to_double();
}

std::string AlgebraicNumber::to_decimal_string(int digits) const {
  AlgebraicNumber self = *this;
  while (true) {
    std::string a = self.lo_.to_decimal_string(digits);
    std::string b = self.hi_.to_decimal_string(digits);
    if (a == b) return a;
    self.refine_to_width((self.hi_ - self.lo_) / Rational(16));
  }
}

std::string AlgebraicNumber::to_string(const std::string& var) const {
  std::ostringstream os;
  os << "root of " << minpoly_.to_string(var) << " in [" << lo_ << ", " << hi_ << "]";
  return os.str();
}

int ExactValue::compare(const ExactValue& other) const {
  if (is_rational() && other.is_rational()) {
    const Rational& a = rational();
    const Rational& b = other.rational();
    return a < b ? -1 : (a == b ? 0 : +1);
  }
  if (is_rational()) return -other.algebraic().compare(rational());
  if (other.is_rational()) return algebraic().compare(other.rational());
  return algebraic().compare(other.algebraic());
}

double ExactValue::to_double() const {
  return is_rational() ? rational().to_double() : algebraic().to_double();
}

std::string ExactValue::to_decimal_string(int digits) const {
  return is_rational() ? rational().to_decimal_string(digits)
                       : algebraic().to_decimal_string(digits);
}

std::string ExactValue::to_string(const std::string& var) const {
  return is_rational() ? rational().to_string() : algebraic().to_string(var);
}

ExactValue exact_root(const RootInterval& interval) {
  if (interval.exact) return interval.lo;
  if (auto r = rational_root_of(interval)) return *r;
  Rational lo = interval.lo, hi = interval.hi;
  UniPoly mp = minimal_polynomial(interval.factor, lo, hi);
  return AlgebraicNumber(std::move(mp), std::move(lo), std::move(hi));
}

ExactValue eval_at(const UniPoly& f, const ExactValue& v) {
  if (v.is_rational()) return f.eval(v.rational());
  const AlgebraicNumber& a = v.algebraic();
  UniPoly reduced = f.remainder(a.minpoly());
  if (reduced.degree() <= 0)
    return reduced.is_zero() ? Rational(0) : reduced.coefficients()[0];

  // Annihilating polynomial of f(theta): res_x(minpoly(x), y - reduced(x)).
  // The Sylvester determinant is expanded over Q[y]; sizes stay <= 5 here.
  int m = a.minpoly().degree();
  int n = reduced.degree();
  int size = m + n;
  UniPoly zero;
  std::vector<std::vector<UniPoly>> mat(size, std::vector<UniPoly>(size, zero));
  // Rows for minpoly (coefficients constant in y).
  for (int row = 0; row < n; ++row)
    for (int i = 0; i <= m; ++i)
      mat[row][row + i] = UniPoly::constant(a.minpoly().coefficients()[m - i]);
  // Rows for y - reduced(x) as a polynomial in x of degree n.
  for (int row = 0; row < m; ++row) {
    for (int i = 0; i <= n; ++i) {
      Rational c = -reduced.coefficients()[n - i];
      UniPoly entry = UniPoly::constant(c);
      if (n - i == 0) entry = entry + UniPoly(std::vector<Rational>{Rational(0), Rational(1)});
      mat[n + row][row + i] = entry;
    }
  }
  // Laplace expansion.
  std::function<UniPoly(std::vector<std::vector<UniPoly>>&)> det =
      [&](std::vector<std::vector<UniPoly>>& mm) -> UniPoly {
    size_t k = mm.size();
    if (k == 1) return mm[0][0];
    UniPoly acc;
    for (size_t j = 0; j < k; ++j) {
      if (mm[0][j].is_zero()) continue;
      std::vector<std::vector<UniPoly>> minor(k - 1, std::vector<UniPoly>(k - 1, zero));
      for (size_t r = 1; r < k; ++r) {
        size_t cc = 0;
        for (size_t c = 0; c < k; ++c) {
          if (c == j) continue;
          minor[r - 1][cc++] = mm[r][c];
        }
      }
      UniPoly term = mm[0][j] * det(minor);
      acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  UniPoly annihilator = det(mat);
  if (annihilator.is_zero())
    throw Error(ErrorKind::BadArguments, "degenerate resultant while evaluating at algebraic point");

  // Locate the value inside the annihilator's root intervals by refining the
  // argument until the interval image separates cleanly.
  AlgebraicNumber arg = a;
  auto roots = isolate_real_roots(annihilator);
  while (true) {
    auto [vlo, vhi] = interval_eval(reduced, arg.lo(), arg.hi());
    std::vector<size_t> hits;
    for (size_t i = 0; i < roots.size(); ++i) {
      if (!(roots[i].hi < vlo || vhi < roots[i].lo)) hits.push_back(i);
    }
    // The value is itself a root of the annihilator, so once the image
    // bracket meets a single isolating interval, that interval pins it down.
    if (hits.size() == 1) return exact_root(roots[hits[0]]);
    arg.refine_to_width((arg.hi() - arg.lo()) / Rational(16));
  }
}

}  // namespace rellich
