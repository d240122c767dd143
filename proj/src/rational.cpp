#include "rellich/rational.hpp"

#include "rellich/error.hpp"

#include <ostream>
#include <sstream>

namespace rellich {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw Error(ErrorKind::BadArguments, "rational with zero denominator");
  v_ = boost::multiprecision::cpp_rational(num, den);
}

Rational::Rational(long long num, long long den)
    : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::from_string(const std::string& text) {
  auto fail = [&]() -> Error {
    return Error(ErrorKind::BadArguments, "cannot parse rational: '" + text + "'");
  };
  std::string t = text;
  if (t.empty()) throw fail();
  auto slash = t.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(t.substr(0, slash));
      BigInt den(t.substr(slash + 1));
      return Rational(num, den);
    }
    auto dot = t.find('.');
    if (dot != std::string::npos) {
      // Exact decimal: "1.25" -> 125/100.
      std::string digits = t.substr(0, dot) + t.substr(dot + 1);
      int frac = static_cast<int>(t.size() - dot - 1);
      if (digits.empty() || digits == "-" || digits == "+") throw fail();
      BigInt num(digits);
      BigInt den = 1;
      for (int i = 0; i < frac; ++i) den *= 10;
      return Rational(num, den);
    }
    return Rational(BigInt(t));
  } catch (const std::runtime_error&) {
    throw fail();
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) { v_ += o.v_; return *this; }
Rational& Rational::operator-=(const Rational& o) { v_ -= o.v_; return *this; }
Rational& Rational::operator*=(const Rational& o) { v_ *= o.v_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::BadArguments, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw Error(ErrorKind::BadArguments, "zero to negative power");
    return (Rational(1) / *this).pow(-e);
  }
  Rational result(1);
  Rational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Rational::to_string() const {
  std::ostringstream os;
  os << numerator();
  if (!is_integer()) os << "/" << denominator();
  return os.str();
}

std::string Rational::to_decimal_string(int digits) const {
  BigInt num = numerator();
  BigInt den = denominator();
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt whole = num / den;
  BigInt frac = ((num % den) * scale) / den;
  std::ostringstream os;
  if (neg && (whole != 0 || frac != 0)) os << '-';
  os << whole;
  if (digits > 0) {
    std::ostringstream fs;
    fs << frac;
    std::string f = fs.str();
    os << '.' << std::string(digits - f.size(), '0') << f;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.to_string();
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeOverflow: return "degree-overflow";
    case ErrorKind::ZeroPolynomial: return "zero-polynomial";
    case ErrorKind::InvalidOperatorSpec: return "invalid-operator-spec";
    case ErrorKind::IrreducibleTerm: return "irreducible-term";
    case ErrorKind::MissingBasisValue: return "missing-basis-value";
    case ErrorKind::RelaxTargetAbsent: return "relax-target-absent";
    case ErrorKind::UnboundedObjective: return "unbounded-objective";
    case ErrorKind::ConstraintViolation: return "constraint-violation";
    case ErrorKind::QuadratureFailure: return "quadrature-failure";
    case ErrorKind::InsufficientDerivatives: return "insufficient-derivatives";
    case ErrorKind::CoveringViolation: return "covering-violation";
    case ErrorKind::SingularEvaluation: return "singular-evaluation";
    case ErrorKind::Admissibility: return "admissibility";
    case ErrorKind::BadArguments: return "bad-arguments";
  }
  return "unknown";
}

}  // namespace rellich
