#include "rellich/polynomial.hpp"

#include "rellich/error.hpp"

#include <ostream>
#include <sstream>

namespace rellich {

const char* symbol_name(Symbol s) {
  switch (s) {
    case Symbol::Dim: return "n";
    case Symbol::Alpha: return "α";
    case Symbol::Beta: return "β";
    case Symbol::S: return "s";
    case Symbol::Alpha0: return "α0";
    case Symbol::Alpha1: return "α1";
    case Symbol::Alpha2: return "α2";
    case Symbol::Alpha3: return "α3";
    case Symbol::Alpha4: return "α4";
    case Symbol::Gamma: return "γ";
  }
  return "?";
}

std::optional<Symbol> symbol_from_name(const std::string& name) {
  static const std::pair<const char*, Symbol> table[] = {
      {"n", Symbol::Dim},      {"alpha", Symbol::Alpha},  {"α", Symbol::Alpha},
      {"beta", Symbol::Beta},  {"β", Symbol::Beta},       {"s", Symbol::S},
      {"alpha0", Symbol::Alpha0}, {"α0", Symbol::Alpha0},
      {"alpha1", Symbol::Alpha1}, {"α1", Symbol::Alpha1},
      {"alpha2", Symbol::Alpha2}, {"α2", Symbol::Alpha2},
      {"alpha3", Symbol::Alpha3}, {"α3", Symbol::Alpha3},
      {"alpha4", Symbol::Alpha4}, {"α4", Symbol::Alpha4},
      {"gamma", Symbol::Gamma},   {"γ", Symbol::Gamma},
  };
  for (const auto& [key, sym] : table) {
    if (name == key) return sym;
  }
  return std::nullopt;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::is_constant() const { return total_degree() == 0; }

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.total_degree();
  int db = b.total_degree();
  if (da != db) return da > db;
  return a.exp > b.exp;  // lexicographic on the fixed symbol order
}

ParamPolynomial::ParamPolynomial(Rational c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

ParamPolynomial ParamPolynomial::variable(Symbol s) {
  Monomial m;
  m.exp[static_cast<size_t>(s)] = 1;
  return term(Rational(1), m);
}

ParamPolynomial ParamPolynomial::term(Rational coeff, const Monomial& m) {
  ParamPolynomial p;
  p.insert_term(m, coeff);
  return p;
}

bool ParamPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational ParamPolynomial::constant_value() const {
  if (is_zero()) return Rational(0);
  if (!is_constant())
    throw Error(ErrorKind::BadArguments,
                "polynomial is not constant: " + to_string());
  return terms_.begin()->second;
}

int ParamPolynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

int ParamPolynomial::degree_in(Symbol s) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, int(m.exp[static_cast<size_t>(s)]));
  return d;
}

bool ParamPolynomial::is_univariate_in(Symbol s) const {
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < kNumSymbols; ++i) {
      if (i != static_cast<int>(s) && m.exp[i] != 0) return false;
    }
  }
  return true;
}

Rational ParamPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ParamPolynomial::insert_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  if (m.total_degree() > kMaxTotalDegree)
    throw Error(ErrorKind::DegreeOverflow,
                "monomial degree exceeds cap of " + std::to_string(kMaxTotalDegree));
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPolynomial ParamPolynomial::operator-() const {
  ParamPolynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

ParamPolynomial& ParamPolynomial::operator+=(const ParamPolynomial& o) {
  for (const auto& [m, c] : o.terms_) insert_term(m, c);
  return *this;
}

ParamPolynomial& ParamPolynomial::operator-=(const ParamPolynomial& o) {
  for (const auto& [m, c] : o.terms_) insert_term(m, -c);
  return *this;
}

ParamPolynomial ParamPolynomial::operator*(const ParamPolynomial& o) const {
  ParamPolynomial r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      for (int i = 0; i < kNumSymbols; ++i) {
        int e = ma.exp[i] + mb.exp[i];
        if (e > kMaxTotalDegree)
          throw Error(ErrorKind::DegreeOverflow, "exponent overflow in product");
        m.exp[i] = static_cast<uint8_t>(e);
      }
      r.insert_term(m, ca * cb);
    }
  }
  return r;
}

ParamPolynomial ParamPolynomial::pow(int e) const {
  if (e < 0) throw Error(ErrorKind::BadArguments, "negative polynomial power");
  ParamPolynomial r(Rational(1));
  ParamPolynomial base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return r;
}

bool operator<(const ParamPolynomial& a, const ParamPolynomial& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  GradedLexGreater cmp;
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (cmp(ia->first, ib->first)) return true;
    if (cmp(ib->first, ia->first)) return false;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

ParamPolynomial ParamPolynomial::substitute(const Bindings& b) const {
  ParamPolynomial r;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial rest;
    for (int i = 0; i < kNumSymbols; ++i) {
      if (m.exp[i] == 0) continue;
      Symbol s = static_cast<Symbol>(i);
      if (b.has(s)) {
        coeff *= b.get(s)->pow(m.exp[i]);
      } else {
        rest.exp[i] = m.exp[i];
      }
    }
    r.insert_term(rest, coeff);
  }
  return r;
}

ParamPolynomial ParamPolynomial::substitute_symbol(Symbol s, const ParamPolynomial& value) const {
  size_t i = static_cast<size_t>(s);
  ParamPolynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int e = rest.exp[i];
    rest.exp[i] = 0;
    out += ParamPolynomial::term(c, rest) * value.pow(e);
  }
  return out;
}

Rational ParamPolynomial::evaluate(const Bindings& b) const {
  ParamPolynomial r = substitute(b);
  if (!r.is_constant())
    throw Error(ErrorKind::BadArguments,
                "evaluation left free symbols: " + r.to_string());
  return r.constant_value();
}

ParamPolynomial ParamPolynomial::derivative(Symbol s) const {
  size_t i = static_cast<size_t>(s);
  ParamPolynomial r;
  for (const auto& [m, c] : terms_) {
    if (m.exp[i] == 0) continue;
    Monomial d = m;
    d.exp[i] -= 1;
    r.insert_term(d, c * Rational(m.exp[i]));
  }
  return r;
}

std::vector<Rational> ParamPolynomial::univariate_coefficients(Symbol s) const {
  if (!is_univariate_in(s))
    throw Error(ErrorKind::BadArguments,
                "polynomial is not univariate in " + std::string(symbol_name(s)) +
                    ": " + to_string());
  std::vector<Rational> coeffs(degree_in(s) + 1, Rational(0));
  for (const auto& [m, c] : terms_) coeffs[m.exp[static_cast<size_t>(s)]] = c;
  return coeffs;
}

std::string ParamPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool printed_coeff = false;
    if (mag != Rational(1) || m.is_constant()) {
      os << mag.to_string();
      printed_coeff = true;
    }
    bool first_var = true;
    for (int i = 0; i < kNumSymbols; ++i) {
      if (m.exp[i] == 0) continue;
      if (printed_coeff || !first_var) os << "*";
      os << symbol_name(static_cast<Symbol>(i));
      if (m.exp[i] > 1) os << "^" << int(m.exp[i]);
      first_var = false;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamPolynomial& p) {
  return os << p.to_string();
}

// ---------------------------------------------------------------------------
// PolyExpr

struct PolyExpr::Node {
  enum class Kind { Constant, Variable, Add, Sub, Mul, Neg, Pow } kind;
  Rational constant;
  Symbol symbol = Symbol::Dim;
  int exponent = 0;
  std::shared_ptr<const Node> left, right;
};

PolyExpr PolyExpr::constant(Rational c) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Constant;
  n->constant = std::move(c);
  return PolyExpr(std::move(n));
}

PolyExpr PolyExpr::variable(Symbol s) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Variable;
  n->symbol = s;
  return PolyExpr(std::move(n));
}

PolyExpr operator+(const PolyExpr& a, const PolyExpr& b) {
  auto n = std::make_shared<PolyExpr::Node>();
  n->kind = PolyExpr::Node::Kind::Add;
  n->left = a.node_;
  n->right = b.node_;
  return PolyExpr(std::move(n));
}

PolyExpr operator-(const PolyExpr& a, const PolyExpr& b) {
  auto n = std::make_shared<PolyExpr::Node>();
  n->kind = PolyExpr::Node::Kind::Sub;
  n->left = a.node_;
  n->right = b.node_;
  return PolyExpr(std::move(n));
}

PolyExpr operator*(const PolyExpr& a, const PolyExpr& b) {
  auto n = std::make_shared<PolyExpr::Node>();
  n->kind = PolyExpr::Node::Kind::Mul;
  n->left = a.node_;
  n->right = b.node_;
  return PolyExpr(std::move(n));
}

PolyExpr PolyExpr::operator-() const {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Neg;
  n->left = node_;
  return PolyExpr(std::move(n));
}

PolyExpr PolyExpr::pow(int e) const {
  if (e < 0) throw Error(ErrorKind::BadArguments, "negative power in polynomial tree");
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Pow;
  n->left = node_;
  n->exponent = e;
  return PolyExpr(std::move(n));
}

namespace {
ParamPolynomial eval_node(const PolyExpr::Node& n);
}

ParamPolynomial PolyExpr::canonicalize() const { return eval_node(*node_); }

namespace {
ParamPolynomial eval_node(const PolyExpr::Node& n) {
  using Kind = PolyExpr::Node::Kind;
  switch (n.kind) {
    case Kind::Constant: return ParamPolynomial(n.constant);
    case Kind::Variable: return ParamPolynomial::variable(n.symbol);
    case Kind::Add: return eval_node(*n.left) + eval_node(*n.right);
    case Kind::Sub: return eval_node(*n.left) - eval_node(*n.right);
    case Kind::Mul: return eval_node(*n.left) * eval_node(*n.right);
    case Kind::Neg: return -eval_node(*n.left);
    case Kind::Pow: return eval_node(*n.left).pow(n.exponent);
  }
  throw Error(ErrorKind::BadArguments, "corrupt polynomial tree");
}
}  // namespace

ParamPolynomial poly_canonicalize(const PolyExpr& expr) { return expr.canonicalize(); }

}  // namespace rellich
