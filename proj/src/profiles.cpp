#include "rellich/profiles.hpp"

#include "rellich/error.hpp"

#include <cmath>
#include <sstream>

namespace rellich {

namespace {

// Below this the factor exp(-1/u) underflows double precision together with
// every derivative-term polynomial in 1/u.
constexpr double kFlatCutoff = 1.0 / 600.0;

// exp(-1/s) continued by 0 for s <= 0.
Jet4 cinf_decay(const Jet4& s) {
  if (s.value() <= kFlatCutoff) return Jet4::constant(0.0);
  return jet_exp(Jet4::constant(0.0) - jet_recip(s));
}

}  // namespace

Jet4 smooth_step_down(const Jet4& t) {
  if (t.value() <= 0.0) return Jet4::constant(1.0);
  if (t.value() >= 1.0) return Jet4::constant(0.0);
  Jet4 one = Jet4::constant(1.0);
  Jet4 a = cinf_decay(one - t);
  Jet4 b = cinf_decay(t);
  return a / (a + b);
}

SmoothBump::SmoothBump(double r0, double r1) : r0_(r0), r1_(r1) {
  if (!(0.0 < r0 && r0 < r1))
    throw Error(ErrorKind::BadArguments, "bump support requires 0 < r0 < r1");
}

Jet4 SmoothBump::jet(double r) const {
  if (r <= r0_ || r >= r1_) return Jet4::constant(0.0);
  Jet4 rj = Jet4::variable(r);
  double scale = 2.0 / (r1_ - r0_);
  Jet4 t = scale * rj + Jet4::constant(-(r0_ + r1_) / (r1_ - r0_));
  Jet4 u = Jet4::constant(1.0) - t * t;
  if (u.value() <= kFlatCutoff) return Jet4::constant(0.0);
  return jet_exp(Jet4::constant(0.0) - jet_recip(u));
}

std::string SmoothBump::describe() const {
  std::ostringstream os;
  os << "bump[" << r0_ << "," << r1_ << "]";
  return os.str();
}

PowerCutoff::PowerCutoff(double exponent, double log_half_width, double center_scale)
    : p_(exponent), m_(log_half_width), scale_(center_scale) {
  if (!(log_half_width > 0.0) || !(center_scale > 0.0))
    throw Error(ErrorKind::BadArguments, "power cutoff requires M > 0 and scale > 0");
}

double PowerCutoff::lo() const { return scale_ * std::exp(-2.0 * m_); }
double PowerCutoff::hi() const { return scale_ * std::exp(2.0 * m_); }

Jet4 PowerCutoff::jet(double r) const {
  if (r <= lo() || r >= hi()) return Jet4::constant(0.0);
  Jet4 rj = Jet4::variable(r);
  Jet4 u = (1.0 / m_) * (jet_log(rj) - Jet4::constant(std::log(scale_)));
  Jet4 chi;
  double au = std::abs(u.value());
  if (au <= 1.0) {
    chi = Jet4::constant(1.0);
  } else {
    // χ is even; for u < 0 compose with the jet of -u.
    Jet4 uu = u.value() >= 0.0 ? u : Jet4::constant(0.0) - u;
    chi = smooth_step_down(uu - Jet4::constant(1.0));
  }
  return jet_pow(rj, p_) * chi;
}

std::string PowerCutoff::describe() const {
  std::ostringstream os;
  os << "power[p=" << p_ << ",M=" << m_;
  if (scale_ != 1.0) os << ",c=" << scale_;
  os << "]";
  return os.str();
}

std::string TestProfile::describe() const {
  std::ostringstream os;
  os << radial->describe() << " ℓ=" << ell << " n=" << dim;
  if (amplitude != 1.0) os << " a=" << amplitude;
  return os.str();
}

TestProfile make_bump_profile(double r0, double r1, int ell, int dim) {
  if (dim < 1 || ell < 0 || (dim == 1 && ell != 0))
    throw Error(ErrorKind::BadArguments, "invalid profile indices");
  return {std::make_shared<SmoothBump>(r0, r1), ell, dim, 1.0};
}

TestProfile make_power_profile(double p, double m, int ell, int dim, double scale) {
  if (dim < 1 || ell < 0 || (dim == 1 && ell != 0))
    throw Error(ErrorKind::BadArguments, "invalid profile indices");
  return {std::make_shared<PowerCutoff>(p, m, scale), ell, dim, 1.0};
}

std::vector<TestProfile> standard_suite(int dim) {
  std::vector<TestProfile> out;
  const double supports[][2] = {{1.0, 2.0}, {0.5, 3.0}, {2.0, 5.0}, {0.25, 0.75}};
  int max_ell = dim == 1 ? 0 : 2;
  for (const auto& s : supports)
    for (int ell = 0; ell <= max_ell; ++ell)
      out.push_back(make_bump_profile(s[0], s[1], ell, dim));
  // Near-extremal homogeneous tails.
  out.push_back(make_power_profile(1.0, 2.0, 0, dim));
  out.push_back(make_power_profile(-0.5 * (dim - 2), 2.0, 0, dim));
  out.push_back(make_power_profile(-0.5 * (dim - 4), 3.0, 0, dim));
  if (dim >= 2) out.push_back(make_power_profile(1.5, 2.0, 1, dim));
  return out;
}

std::vector<TestProfile> log_suite(int dim, double r1) {
  std::vector<TestProfile> out;
  int max_ell = dim == 1 ? 0 : 1;
  const double windows[][2] = {{0.05, 0.9}, {0.2, 0.7}, {0.01, 0.3}};
  for (const auto& w : windows)
    for (int ell = 0; ell <= max_ell; ++ell)
      out.push_back(make_bump_profile(w[0] * r1, w[1] * r1, ell, dim));
  return out;
}

}  // namespace rellich
