#include "rellich/univariate.hpp"

#include "rellich/error.hpp"

#include <algorithm>
#include <sstream>

namespace rellich {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::constant(Rational c) { return UniPoly(std::vector<Rational>{std::move(c)}); }

UniPoly UniPoly::from_param(const ParamPolynomial& p, Symbol s) {
  return UniPoly(p.univariate_coefficients(s));
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int UniPoly::sign_at_infinity(int dir) const {
  if (is_zero()) return 0;
  int s = leading().sign();
  if (dir < 0 && (degree() % 2 != 0)) s = -s;
  return s;
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(-c);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Rational& k) const {
  std::vector<Rational> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c * k);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return scaled(Rational(1) / leading());
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long long>(i));
  return UniPoly(std::move(r));
}

UniPoly::DivMod UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero())
    throw Error(ErrorKind::BadArguments, "polynomial division by zero");
  std::vector<Rational> rem = c_;
  std::vector<Rational> quot;
  int dd = divisor.degree();
  if (degree() >= dd) quot.assign(degree() - dd + 1, Rational(0));
  while (static_cast<int>(rem.size()) - 1 >= dd) {
    int k = static_cast<int>(rem.size()) - 1 - dd;
    Rational factor = rem.back() / divisor.leading();
    quot[k] = factor;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= factor * divisor.c_[i];
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    if (static_cast<int>(rem.size()) - 1 < dd) break;
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != Rational(1)) os << mag.to_string();
    if (i > 0) {
      if (mag != Rational(1)) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.remainder(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "square-free decomposition of 0");
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() == 0) return out;
  UniPoly f = p.monic();
  UniPoly fp = f.derivative();
  UniPoly u = gcd(f, fp);
  if (u.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  // Yun's algorithm.
  UniPoly v = f.divmod(u).quotient;
  UniPoly w = fp.divmod(u).quotient;
  int mult = 1;
  while (v.degree() > 0) {
    UniPoly d = w - v.derivative();
    UniPoly h = gcd(v, d);
    if (h.degree() > 0) out.emplace_back(h, mult);
    v = v.divmod(h).quotient;
    w = d.divmod(h).quotient;
    ++mult;
  }
  return out;
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  int m = a.degree(), n = b.degree();
  if (m == 0) return a.leading().pow(n);
  if (n == 0) return b.leading().pow(m);
  // Sylvester matrix, (m+n) x (m+n); sizes here are tiny.
  int size = m + n;
  std::vector<std::vector<Rational>> mat(size, std::vector<Rational>(size, Rational(0)));
  for (int row = 0; row < n; ++row)
    for (int i = 0; i <= m; ++i) mat[row][row + i] = a.coefficients()[m - i];
  for (int row = 0; row < m; ++row)
    for (int i = 0; i <= n; ++i) mat[n + row][row + i] = b.coefficients()[n - i];
  // Gaussian elimination with exact arithmetic.
  Rational det(1);
  for (int col = 0; col < size; ++col) {
    int pivot = -1;
    for (int r = col; r < size; ++r) {
      if (!mat[r][col].is_zero()) { pivot = r; break; }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(mat[pivot], mat[col]);
      det = -det;
    }
    det *= mat[col][col];
    Rational inv = Rational(1) / mat[col][col];
    for (int r = col + 1; r < size; ++r) {
      if (mat[r][col].is_zero()) continue;
      Rational factor = mat[r][col] * inv;
      for (int c = col; c < size; ++c) mat[r][c] -= factor * mat[col][c];
    }
  }
  return det;
}

SturmChain::SturmChain(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sturm chain of zero polynomial");
  chain_.push_back(p);
  UniPoly d = p.derivative();
  if (!d.is_zero()) {
    chain_.push_back(d);
    while (true) {
      const UniPoly& a = chain_[chain_.size() - 2];
      const UniPoly& b = chain_.back();
      UniPoly r = a.remainder(b);
      if (r.is_zero()) break;
      chain_.push_back(-r);
      if (chain_.back().degree() == 0) break;
    }
  }
}

int SturmChain::variations_at(const std::optional<Rational>& x, int dir) const {
  int variations = 0;
  int prev = 0;
  for (const auto& p : chain_) {
    int s = x.has_value() ? p.sign_at(*x) : p.sign_at_infinity(dir);
    if (s == 0) continue;  // zeros are skipped in the sign sequence
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int SturmChain::count_roots(const std::optional<Rational>& a,
                            const std::optional<Rational>& b) const {
  // With zeros skipped, V(a) - V(b) counts distinct roots in (a, b].
  return variations_at(a, -1) - variations_at(b, +1);
}

namespace {

// Strict bound on the absolute value of all roots (Cauchy bound).
Rational root_bound(const UniPoly& p) {
  Rational m(0);
  const auto& c = p.coefficients();
  for (int i = 0; i < p.degree(); ++i) m = max(m, (c[i] / p.leading()).abs());
  return m + Rational(1);
}

void isolate_squarefree(const UniPoly& f, const Rational& lo, const Rational& hi,
                        int multiplicity, std::vector<RootInterval>& out) {
  SturmChain chain(f);
  struct Span { Rational a, b; int count; };
  std::vector<Span> work;
  int total = chain.count_roots(lo, hi);
  if (total > 0) work.push_back({lo, hi, total});
  while (!work.empty()) {
    Span span = work.back();
    work.pop_back();
    if (span.count == 1) {
      out.push_back({f, span.a, span.b, multiplicity, false});
      continue;
    }
    // Split point strictly inside (a, b) avoiding roots of f; a square-free f
    // has finitely many, so a few distinct candidates always suffice.
    Rational mid = (span.a + span.b) / Rational(2);
    Rational step = (span.b - span.a) / Rational(4);
    while (f.sign_at(mid) == 0) {
      mid += step;
      step = step / Rational(2);
    }
    int left = chain.count_roots(span.a, mid);
    int right = span.count - left;
    if (left > 0) work.push_back({span.a, mid, left});
    if (right > 0) work.push_back({mid, span.b, right});
  }
}

}  // namespace

void RootInterval::refine_to_width(const Rational& width) {
  if (exact) return;
  SturmChain chain(factor);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / Rational(2);
    if (factor.sign_at(mid) == 0) {
      lo = hi = mid;
      exact = true;
      return;
    }
    if (chain.count_roots(lo, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& p,
                                             const std::optional<Rational>& lo,
                                             const std::optional<Rational>& hi) {
  if (p.is_zero())
    throw Error(ErrorKind::ZeroPolynomial, "cannot isolate roots of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;

  Rational bound = root_bound(p);
  Rational a = lo.value_or(-bound);
  Rational b = hi.value_or(bound);
  if (lo.has_value()) a = max(a, -bound);
  if (hi.has_value()) b = min(b, bound);
  if (!(a < b)) return out;  // window outside the root bound

  for (const auto& [factor, mult] : squarefree_decomposition(p))
    isolate_squarefree(factor, a, b, mult, out);

  // Refine until intervals are pairwise disjoint, then order them.
  bool overlapping = true;
  Rational width = Rational(1);
  while (overlapping) {
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    overlapping = false;
    for (size_t i = 0; i + 1 < out.size(); ++i) {
      if (!(out[i].hi < out[i + 1].lo || out[i].hi == out[i + 1].lo)) {
        overlapping = true;
        break;
      }
    }
    if (overlapping) {
      width = width / Rational(4);
      for (auto& ri : out) ri.refine_to_width(width);
    }
  }
  return out;
}

std::vector<RootInterval> isolate_real_roots(const ParamPolynomial& p, Symbol s,
                                             const std::optional<Rational>& lo,
                                             const std::optional<Rational>& hi) {
  return isolate_real_roots(UniPoly::from_param(p, s), lo, hi);
}

namespace {
// Stern-Brocot descent; both endpoints positive, lo <= hi.
Rational simplest_positive(const Rational& lo, const Rational& hi) {
  BigInt a = lo.numerator() / lo.denominator();            // floor, lo > 0
  BigInt c = (lo.numerator() + lo.denominator() - 1) / lo.denominator();  // ceil
  if (Rational(c) <= hi) return Rational(c);
  // No integer inside; recurse on the reciprocal fractional parts.
  Rational inner = simplest_positive(Rational(1) / (hi - Rational(a)),
                                     Rational(1) / (lo - Rational(a)));
  return Rational(a) + Rational(1) / inner;
}
}  // namespace

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw Error(ErrorKind::BadArguments, "empty interval");
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (lo.sign() > 0) return simplest_positive(lo, hi);
  return -simplest_positive(-hi, -lo);
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  if (q.is_zero()) return Rational(0);
  BigInt num = q.numerator();
  BigInt den = q.denominator();
  BigInt sn = boost::multiprecision::sqrt(num);
  BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace rellich
