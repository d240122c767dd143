#include "rellich/operator_algebra.hpp"

#include "rellich/error.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <sstream>
#include <tuple>

namespace rellich {

namespace {

// Generators of the word algebra. Weights carry their exponent; words never
// contain W(0).
struct Gen {
  enum class Kind : uint8_t { Weight, Euler, Laplacian } kind;
  int s = 0;
};

using Word = std::vector<Gen>;

struct LooseTerm {
  ParamPolynomial coeff;
  Word word;
};

// Position of the first rule application at index i (acting on word[i],
// word[i+1]), or -1 when the word is normal ordered. Adjacent weights are
// treated as a redex so they merge.
bool is_redex(const Word& w, size_t i) {
  const Gen& a = w[i];
  const Gen& b = w[i + 1];
  if (b.kind == Gen::Kind::Weight && a.kind != Gen::Kind::Weight) return true;  // R1 / R2
  if (a.kind == Gen::Kind::Laplacian && b.kind == Gen::Kind::Euler) return true;  // R3
  if (a.kind == Gen::Kind::Weight && b.kind == Gen::Kind::Weight) return true;  // merge
  return false;
}

std::vector<size_t> redex_positions(const Word& w) {
  std::vector<size_t> out;
  if (w.size() < 2) return out;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (is_redex(w, i)) out.push_back(i);
  return out;
}

Word splice(const Word& w, size_t i, std::initializer_list<Gen> replacement) {
  Word out;
  out.reserve(w.size() + replacement.size());
  out.insert(out.end(), w.begin(), w.begin() + i);
  for (const Gen& g : replacement)
    if (!(g.kind == Gen::Kind::Weight && g.s == 0)) out.push_back(g);
  out.insert(out.end(), w.begin() + i + 2, w.end());
  return out;
}

// Apply the rule at position i, appending the resulting terms to `queue`.
void apply_rule(const LooseTerm& t, size_t i, std::deque<LooseTerm>& queue) {
  const Gen& a = t.word[i];
  const Gen& b = t.word[i + 1];
  const ParamPolynomial n = ParamPolynomial::variable(Symbol::Dim);

  if (a.kind == Gen::Kind::Weight && b.kind == Gen::Kind::Weight) {
    queue.push_back({t.coeff, splice(t.word, i, {Gen{Gen::Kind::Weight, a.s + b.s}})});
    return;
  }
  if (a.kind == Gen::Kind::Euler && b.kind == Gen::Kind::Weight) {
    // (R1) D·r^-s = r^-s·D - s·r^-s
    queue.push_back({t.coeff, splice(t.word, i, {b, a})});
    queue.push_back({t.coeff * ParamPolynomial(Rational(-b.s)), splice(t.word, i, {b})});
    return;
  }
  if (a.kind == Gen::Kind::Laplacian && b.kind == Gen::Kind::Weight) {
    // (R2) Δ·r^-s = r^-s·Δ - 2s·r^-s-2·D + s(s+2-n)·r^-s-2
    Gen heavier{Gen::Kind::Weight, b.s + 2};
    queue.push_back({t.coeff, splice(t.word, i, {b, a})});
    queue.push_back({t.coeff * ParamPolynomial(Rational(-2 * b.s)),
                     splice(t.word, i, {heavier, Gen{Gen::Kind::Euler}})});
    ParamPolynomial c = ParamPolynomial(Rational(b.s)) *
                        (ParamPolynomial(Rational(b.s + 2)) - n);
    queue.push_back({t.coeff * c, splice(t.word, i, {heavier})});
    return;
  }
  if (a.kind == Gen::Kind::Laplacian && b.kind == Gen::Kind::Euler) {
    // (R3) Δ·D = D·Δ + 2Δ
    queue.push_back({t.coeff, splice(t.word, i, {b, a})});
    queue.push_back({t.coeff * ParamPolynomial(2), splice(t.word, i, {a})});
    return;
  }
  throw Error(ErrorKind::BadArguments, "apply_rule called on a non-redex");
}

OperatorKey key_of_normal_word(const Word& w) {
  OperatorKey k;
  for (const Gen& g : w) {
    switch (g.kind) {
      case Gen::Kind::Weight: k.rpow += g.s; break;
      case Gen::Kind::Euler: k.dpow += 1; break;
      case Gen::Kind::Laplacian: k.lpow += 1; break;
    }
  }
  return k;
}

OperatorExpr normal_order(std::deque<LooseTerm> queue, const RewriteStrategy& strategy) {
  OperatorExpr out;
  std::mt19937_64 rng(strategy.seed);
  while (!queue.empty()) {
    LooseTerm t = std::move(queue.front());
    queue.pop_front();
    if (t.coeff.is_zero()) continue;
    auto redexes = redex_positions(t.word);
    if (redexes.empty()) {
      out.add_term(key_of_normal_word(t.word), t.coeff);
      continue;
    }
    size_t pick = 0;
    switch (strategy.pick) {
      case RewriteStrategy::Pick::First: pick = redexes.front(); break;
      case RewriteStrategy::Pick::Last: pick = redexes.back(); break;
      case RewriteStrategy::Pick::Random:
        pick = redexes[std::uniform_int_distribution<size_t>(0, redexes.size() - 1)(rng)];
        break;
    }
    apply_rule(t, pick, queue);
  }
  return out;
}

Word word_of_key(const OperatorKey& k) {
  Word w;
  if (k.rpow > 0) w.push_back({Gen::Kind::Weight, k.rpow});
  for (int i = 0; i < k.dpow; ++i) w.push_back({Gen::Kind::Euler});
  for (int i = 0; i < k.lpow; ++i) w.push_back({Gen::Kind::Laplacian});
  return w;
}

}  // namespace

OperatorExpr OperatorExpr::term(ParamPolynomial coeff, int rpow, int dpow, int lpow) {
  if (rpow < 0 || dpow < 0 || lpow < 0)
    throw Error(ErrorKind::InvalidOperatorSpec, "negative word exponent in operator term");
  OperatorExpr e;
  e.add_term(OperatorKey{rpow, dpow, lpow}, coeff);
  return e;
}

ParamPolynomial OperatorExpr::coefficient(const OperatorKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? ParamPolynomial() : it->second;
}

void OperatorExpr::add_term(const OperatorKey& k, const ParamPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorExpr OperatorExpr::operator-() const {
  OperatorExpr r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

OperatorExpr OperatorExpr::scaled(const ParamPolynomial& c) const {
  OperatorExpr r;
  for (const auto& [k, coeff] : terms_) r.add_term(k, coeff * c);
  return r;
}

namespace {

std::string render_coeff(const ParamPolynomial& c, bool leading, std::string* sep) {
  // Returns the magnitude rendering; fills *sep with " + " / " - " or "-".
  std::ostringstream os;
  bool negated = false;
  ParamPolynomial shown = c;
  if (c.terms().size() == 1 && c.terms().begin()->second.sign() < 0) {
    negated = true;
    shown = -c;
  }
  *sep = leading ? (negated ? "-" : "") : (negated ? " - " : " + ");
  if (shown.is_constant() && shown.constant_value() == Rational(1)) return "";
  if (shown.terms().size() > 1) {
    os << "(" << shown.to_string() << ")";
  } else {
    os << shown.to_string();
  }
  return os.str();
}

std::string render_word(const OperatorKey& k) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first) os << " ";
    first = false;
  };
  if (k.rpow > 0) {
    sep();
    os << "|x|^-" << k.rpow;
  }
  if (k.dpow == 1) {
    sep();
    os << "x·∇";
  } else if (k.dpow > 1) {
    sep();
    os << "(x·∇)^" << k.dpow;
  }
  if (k.lpow == 1) {
    sep();
    os << "Δ";
  } else if (k.lpow > 1) {
    sep();
    os << "Δ^" << k.lpow;
  }
  return os.str();
}

}  // namespace

std::string OperatorExpr::to_string() const {
  if (terms_.empty()) return "0";
  // Paper-style order: weights ascending, higher derivative order first.
  std::vector<const TermMap::value_type*> order;
  for (const auto& kv : terms_) order.push_back(&kv);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    int da = a->first.dpow + 2 * a->first.lpow;
    int db = b->first.dpow + 2 * b->first.lpow;
    return std::tuple(a->first.rpow, -da, -a->first.dpow) <
           std::tuple(b->first.rpow, -db, -b->first.dpow);
  });
  std::ostringstream os;
  bool leading = true;
  for (const auto* kv : order) {
    std::string sep;
    std::string coeff = render_coeff(kv->second, leading, &sep);
    std::string word = render_word(kv->first);
    os << sep << coeff;
    if (!coeff.empty() && !word.empty()) os << "*";
    if (word.empty() && coeff.empty()) os << "1";
    os << word;
    leading = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const OperatorExpr& op) {
  return os << op.to_string();
}

OperatorExpr make_t_alpha_beta() {
  OperatorExpr e;
  e.add_term({0, 0, 1}, ParamPolynomial(-1));
  e.add_term({2, 1, 0}, ParamPolynomial::variable(Symbol::Alpha));
  e.add_term({2, 0, 0}, ParamPolynomial::variable(Symbol::Beta));
  return e;
}

OperatorExpr make_laplacian() { return OperatorExpr::term(ParamPolynomial(1), 0, 0, 1); }
OperatorExpr make_euler() { return OperatorExpr::term(ParamPolynomial(1), 0, 1, 0); }

OperatorExpr make_weight(int s) {
  if (s < 0) throw Error(ErrorKind::InvalidOperatorSpec, "weight exponent must be >= 0");
  return OperatorExpr::term(ParamPolynomial(1), s, 0, 0);
}

OperatorExpr make_tilde_t_alpha() {
  OperatorExpr e;
  e.add_term({1, 1, 0}, ParamPolynomial(1));
  e.add_term({1, 0, 0}, ParamPolynomial::variable(Symbol::Alpha));
  return e;
}

OperatorExpr make_custom(
    const std::vector<std::tuple<ParamPolynomial, int, int, int>>& terms) {
  OperatorExpr e;
  for (const auto& [c, r, d, l] : terms) {
    if (r < 0 || d < 0 || l < 0)
      throw Error(ErrorKind::InvalidOperatorSpec, "negative word exponent in custom operator");
    e.add_term({r, d, l}, c);
  }
  return e;
}

OperatorExpr adjoint(const OperatorExpr& a) {
  // Reverse each word and replace D by D⁺ = -D - n; Δ and r^-s are
  // self-adjoint. (-D - n)^k expands binomially since n is a scalar symbol.
  const ParamPolynomial n = ParamPolynomial::variable(Symbol::Dim);
  std::deque<LooseTerm> queue;
  for (const auto& [k, c] : a.terms()) {
    // Binomial expansion of (-(D + n))^k over D powers.
    std::vector<ParamPolynomial> dpoly(k.dpow + 1, ParamPolynomial());  // coeff of D^j
    dpoly[0] = ParamPolynomial(1);
    for (int rep = 0; rep < k.dpow; ++rep) {
      std::vector<ParamPolynomial> next(k.dpow + 1, ParamPolynomial());
      for (int j = 0; j <= rep; ++j) {
        if (dpoly[j].is_zero()) continue;
        next[j + 1] += -dpoly[j];
        next[j] += dpoly[j] * -n;
      }
      dpoly = std::move(next);
    }
    for (int j = 0; j <= k.dpow; ++j) {
      if (dpoly[j].is_zero()) continue;
      Word w;
      for (int i = 0; i < k.lpow; ++i) w.push_back({Gen::Kind::Laplacian});
      for (int i = 0; i < j; ++i) w.push_back({Gen::Kind::Euler});
      if (k.rpow > 0) w.push_back({Gen::Kind::Weight, k.rpow});
      queue.push_back({c * dpoly[j], std::move(w)});
    }
  }
  return normal_order(std::move(queue), RewriteStrategy{});
}

OperatorExpr compose(const OperatorExpr& a, const OperatorExpr& b,
                     const RewriteStrategy& strategy) {
  std::deque<LooseTerm> queue;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      Word w = word_of_key(ka);
      Word wb = word_of_key(kb);
      w.insert(w.end(), wb.begin(), wb.end());
      queue.push_back({ca * cb, std::move(w)});
    }
  }
  return normal_order(std::move(queue), strategy);
}

OperatorExpr compose(const OperatorExpr& a, const OperatorExpr& b) {
  return compose(a, b, RewriteStrategy{});
}

OperatorExpr specialize(const OperatorExpr& a, const Bindings& b) {
  OperatorExpr r;
  for (const auto& [k, c] : a.terms()) r.add_term(k, c.substitute(b));
  return r;
}

void OneDimOperator::add_term(const OneDimKey& k, const ParamPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string OneDimOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  for (const auto& kv : terms_) order.push_back(&kv);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return std::tuple(-a->first.order, a->first.xpow) <
           std::tuple(-b->first.order, b->first.xpow);
  });
  std::ostringstream os;
  bool leading = true;
  for (const auto* kv : order) {
    std::string sep;
    std::string coeff = render_coeff(kv->second, leading, &sep);
    os << sep << coeff;
    std::ostringstream word;
    if (kv->first.xpow != 0) word << "x^" << -kv->first.xpow << " ";
    if (kv->first.order == 1) {
      word << "d/dx";
    } else if (kv->first.order > 1) {
      word << "d^" << kv->first.order << "/dx^" << kv->first.order;
    }
    std::string ws = word.str();
    if (!ws.empty() && ws.back() == ' ') ws.pop_back();
    if (!coeff.empty() && !ws.empty()) os << "*";
    if (ws.empty() && coeff.empty()) os << "1";
    os << ws;
    leading = false;
  }
  return os.str();
}

OneDimOperator to_one_dim(const OperatorExpr& a) {
  // Stirling numbers of the second kind convert (x d/dx)^k into x^j d^j.
  constexpr int kMax = 16;
  static const auto stirling = [] {
    std::array<std::array<long long, kMax>, kMax> s{};
    s[0][0] = 1;
    for (int k = 1; k < kMax; ++k)
      for (int j = 1; j <= k; ++j)
        s[k][j] = s[k - 1][j - 1] + static_cast<long long>(j) * s[k - 1][j];
    return s;
  }();

  OneDimOperator out;
  for (const auto& [k, c] : a.terms()) {
    if (k.dpow >= kMax)
      throw Error(ErrorKind::BadArguments, "Euler power too large for 1-D conversion");
    for (int j = 0; j <= k.dpow; ++j) {
      long long s2 = stirling[k.dpow][j];
      if (s2 == 0) continue;
      OneDimKey key{k.rpow - j, j + 2 * k.lpow};
      out.add_term(key, c * ParamPolynomial(Rational(s2)));
    }
  }
  return out;
}

}  // namespace rellich
