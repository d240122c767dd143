#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rellich/jets.hpp"

namespace rellich {

// Radial profile φ supported in a compact annulus [lo, hi] with
// 0 < lo < hi, evaluable with four exact derivatives.
class RadialProfile {
 public:
  virtual ~RadialProfile() = default;
  virtual Jet4 jet(double r) const = 0;
  virtual double lo() const = 0;
  virtual double hi() const = 0;
  virtual std::string describe() const = 0;
};

// Flat C^∞ bump exp(-1/(1-t²)) rescaled to [r0, r1].
class SmoothBump final : public RadialProfile {
 public:
  SmoothBump(double r0, double r1);
  Jet4 jet(double r) const override;
  double lo() const override { return r0_; }
  double hi() const override { return r1_; }
  std::string describe() const override;

 private:
  double r0_, r1_;
};

// φ(r) = r^p · χ(ln(r/c)/M) with χ a fixed C^∞ cutoff equal to 1 on [-1,1]
// and supported in [-2,2]. The near-extremal family for the homogeneous
// inequalities.
class PowerCutoff final : public RadialProfile {
 public:
  PowerCutoff(double exponent, double log_half_width, double center_scale = 1.0);
  Jet4 jet(double r) const override;
  double lo() const override;
  double hi() const override;
  std::string describe() const override;
  double log_half_width() const { return m_; }

 private:
  double p_, m_, scale_;
};

// C^∞ step: 1 for t <= 0, 0 for t >= 1.
Jet4 smooth_step_down(const Jet4& t);

// Separable test function f = a·φ(r)·Y_ℓ(ω) with a normalized spherical
// harmonic; dim >= 2, or dim == 1 for the half-line (then ell must be 0).
struct TestProfile {
  std::shared_ptr<const RadialProfile> radial;
  int ell = 0;
  int dim = 3;
  double amplitude = 1.0;

  double lambda() const { return static_cast<double>(ell) * (ell + dim - 2); }
  Jet4 jet(double r) const {
    Jet4 j = radial->jet(r);
    return amplitude * j;
  }
  std::string describe() const;
};

TestProfile make_bump_profile(double r0, double r1, int ell, int dim);
TestProfile make_power_profile(double p, double m, int ell, int dim, double scale = 1.0);

// Default verification suites.
std::vector<TestProfile> standard_suite(int dim);
// Profiles supported inside (0, r1); used by the iterated-log inequalities.
std::vector<TestProfile> log_suite(int dim, double r1);

}  // namespace rellich
