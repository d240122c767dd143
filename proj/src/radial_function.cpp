#include "rellich/radial_function.hpp"

#include "rellich/error.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace rellich {

namespace {
void trim(std::vector<int>& logpow) {
  while (!logpow.empty() && logpow.back() == 0) logpow.pop_back();
}
}  // namespace

RadialFunction RadialFunction::monomial(ParamPolynomial coeff, int rpow,
                                        std::vector<int> logpow) {
  RadialFunction f;
  LogMonomialKey key{rpow, std::move(logpow)};
  trim(key.logpow);
  f.add(std::move(key), coeff);
  return f;
}

void RadialFunction::add(LogMonomialKey key, const ParamPolynomial& c) {
  if (c.is_zero()) return;
  trim(key.logpow);
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RadialFunction RadialFunction::operator-() const {
  RadialFunction r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

RadialFunction& RadialFunction::operator+=(const RadialFunction& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

RadialFunction& RadialFunction::operator-=(const RadialFunction& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

RadialFunction RadialFunction::operator*(const RadialFunction& o) const {
  RadialFunction r;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      LogMonomialKey k;
      k.rpow = ka.rpow + kb.rpow;
      k.logpow.resize(std::max(ka.logpow.size(), kb.logpow.size()), 0);
      for (size_t i = 0; i < ka.logpow.size(); ++i) k.logpow[i] += ka.logpow[i];
      for (size_t i = 0; i < kb.logpow.size(); ++i) k.logpow[i] += kb.logpow[i];
      r.add(std::move(k), ca * cb);
    }
  }
  return r;
}

RadialFunction RadialFunction::scaled(const ParamPolynomial& c) const {
  RadialFunction r;
  for (const auto& [k, coeff] : terms_) r.add(k, coeff * c);
  return r;
}

RadialFunction RadialFunction::times_r_power(int k) const {
  RadialFunction r;
  for (const auto& [key, coeff] : terms_) {
    LogMonomialKey shifted = key;
    shifted.rpow += k;
    r.add(std::move(shifted), coeff);
  }
  return r;
}

RadialFunction RadialFunction::derivative() const {
  // d/dr r^p = p r^(p-1);  d/dr L_k = -(1/r) Π_{j<k} L_j^-1.
  RadialFunction out;
  for (const auto& [key, coeff] : terms_) {
    if (key.rpow != 0) {
      LogMonomialKey k = key;
      k.rpow -= 1;
      out.add(std::move(k), coeff * ParamPolynomial(Rational(key.rpow)));
    }
    for (size_t i = 0; i < key.logpow.size(); ++i) {
      if (key.logpow[i] == 0) continue;
      LogMonomialKey k = key;
      k.rpow -= 1;
      k.logpow[i] -= 1;
      for (size_t j = 0; j < i; ++j) k.logpow[j] -= 1;
      out.add(std::move(k), coeff * ParamPolynomial(Rational(-key.logpow[i])));
    }
  }
  return out;
}

RadialFunction RadialFunction::substitute(const Bindings& b) const {
  RadialFunction r;
  for (const auto& [k, c] : terms_) r.add(k, c.substitute(b));
  return r;
}

double RadialFunction::eval(double r, const Bindings& bindings, double gamma_value) const {
  if (!(r > 0.0) || !(gamma_value > 0.0))
    throw Error(ErrorKind::SingularEvaluation, "radial evaluation requires r > 0, γ > 0");
  size_t levels = 0;
  for (const auto& [k, c] : terms_) levels = std::max(levels, k.logpow.size());
  std::vector<double> logs(levels);
  if (levels > 0) {
    logs[0] = -std::log(r / gamma_value);
    for (size_t i = 1; i < levels; ++i) {
      if (!(logs[i - 1] > 0.0))
        throw Error(ErrorKind::SingularEvaluation,
                    "iterated log undefined: L_" + std::to_string(i) + " <= 0 at r=" +
                        std::to_string(r));
      logs[i] = std::log(logs[i - 1]);
    }
  }
  double sum = 0.0;
  for (const auto& [k, c] : terms_) {
    double term = c.evaluate(bindings).to_double() * std::pow(r, k.rpow);
    for (size_t i = 0; i < k.logpow.size(); ++i) {
      if (k.logpow[i] == 0) continue;
      if (!(logs[i] > 0.0) && k.logpow[i] < 0)
        throw Error(ErrorKind::SingularEvaluation,
                    "iterated log L_" + std::to_string(i + 1) + " <= 0 at r=" +
                        std::to_string(r));
      term *= std::pow(logs[i], k.logpow[i]);
    }
    sum += term;
  }
  return sum;
}

std::string RadialFunction::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool leading = true;
  for (const auto& [k, c0] : terms_) {
    ParamPolynomial c = c0;
    bool negated = false;
    if (c.terms().size() == 1 && c.terms().begin()->second.sign() < 0) {
      negated = true;
      c = -c;
    }
    os << (leading ? (negated ? "-" : "") : (negated ? " - " : " + "));
    leading = false;
    bool unit = c.is_constant() && c.constant_value() == Rational(1);
    std::ostringstream word;
    if (k.rpow != 0) word << "r^" << k.rpow;
    for (size_t i = 0; i < k.logpow.size(); ++i) {
      if (k.logpow[i] == 0) continue;
      if (word.tellp() > 0) word << "·";
      word << "L" << (i + 1);
      if (k.logpow[i] != 1) word << "^" << k.logpow[i];
    }
    std::string ws = word.str();
    if (!unit) {
      if (c.terms().size() > 1) {
        os << "(" << c.to_string() << ")";
      } else {
        os << c.to_string();
      }
      if (!ws.empty()) os << "·";
    }
    if (ws.empty() && unit) os << "1";
    os << ws;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RadialFunction& f) {
  return os << f.to_string();
}

VectorFactor iterated_log_multiplier(int m) {
  if (m < 0 || m > 4)
    throw Error(ErrorKind::BadArguments, "iterated-log level must be in [0, 4]");
  const ParamPolynomial n = ParamPolynomial::variable(Symbol::Dim);
  const ParamPolynomial am = ParamPolynomial::variable(log_alpha_symbol(m));
  const ParamPolynomial half(Rational(1, 2));
  RadialFunction g = RadialFunction::monomial(half * (n - ParamPolynomial(2)), -2);
  for (int j = 1; j <= m; ++j)
    g += RadialFunction::monomial(half, -2, std::vector<int>(j, -1));
  g -= RadialFunction::monomial(half * am, -2, std::vector<int>(m, -1));
  return VectorFactor{std::move(g)};
}

RadialFunction potential_of_factor(const VectorFactor& factor, const ParamPolynomial& dim) {
  const RadialFunction& g = factor.g;
  RadialFunction v = (g * g).times_r_power(2);
  v -= g.scaled(dim);
  v -= g.derivative().times_r_power(1);
  return v;
}

RadialFunction log_hardy_weight(int m) {
  if (m < 0) throw Error(ErrorKind::BadArguments, "negative iterated-log level");
  const ParamPolynomial n = ParamPolynomial::variable(Symbol::Dim);
  const ParamPolynomial quarter(Rational(1, 4));
  RadialFunction w =
      RadialFunction::monomial(quarter * (n - ParamPolynomial(2)) * (n - ParamPolynomial(2)), -2);
  for (int j = 1; j <= m; ++j)
    w += RadialFunction::monomial(quarter, -2, std::vector<int>(j, -2));
  return w;
}

}  // namespace rellich
