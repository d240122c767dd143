#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace rellich {

// Fourth-order univariate Taylor jet: value and derivatives d[1..4] with
// respect to the underlying variable. `valid` counts how many derivative
// slots are meaningful; operations propagate the minimum. Profile evaluation
// produces valid = 4; each radial operator application consumes orders.
struct Jet4 {
  std::array<double, 5> d{};
  int valid = 4;

  static Jet4 constant(double c) {
    Jet4 j;
    j.d[0] = c;
    return j;
  }
  static Jet4 variable(double x) {
    Jet4 j;
    j.d[0] = x;
    j.d[1] = 1.0;
    return j;
  }

  double value() const { return d[0]; }

  friend Jet4 operator+(const Jet4& a, const Jet4& b) {
    Jet4 r;
    r.valid = std::min(a.valid, b.valid);
    for (int i = 0; i <= 4; ++i) r.d[i] = a.d[i] + b.d[i];
    return r;
  }
  friend Jet4 operator-(const Jet4& a, const Jet4& b) {
    Jet4 r;
    r.valid = std::min(a.valid, b.valid);
    for (int i = 0; i <= 4; ++i) r.d[i] = a.d[i] - b.d[i];
    return r;
  }
  friend Jet4 operator*(double k, const Jet4& a) {
    Jet4 r = a;
    for (int i = 0; i <= 4; ++i) r.d[i] *= k;
    return r;
  }
  friend Jet4 operator*(const Jet4& a, const Jet4& b) {
    Jet4 r;
    r.valid = std::min(a.valid, b.valid);
    // Leibniz rule.
    static constexpr double binom[5][5] = {{1, 0, 0, 0, 0},
                                           {1, 1, 0, 0, 0},
                                           {1, 2, 1, 0, 0},
                                           {1, 3, 3, 1, 0},
                                           {1, 4, 6, 4, 1}};
    for (int k = 0; k <= 4; ++k) {
      double s = 0.0;
      for (int j = 0; j <= k; ++j) s += binom[k][j] * a.d[j] * b.d[k - j];
      r.d[k] = s;
    }
    return r;
  }
};

// h∘f for a univariate h given its derivatives h[0..4] at f.value()
// (Faà di Bruno through order 4).
inline Jet4 compose(const std::array<double, 5>& h, const Jet4& f) {
  Jet4 r;
  r.valid = f.valid;
  const double f1 = f.d[1], f2 = f.d[2], f3 = f.d[3], f4 = f.d[4];
  r.d[0] = h[0];
  r.d[1] = h[1] * f1;
  r.d[2] = h[2] * f1 * f1 + h[1] * f2;
  r.d[3] = h[3] * f1 * f1 * f1 + 3.0 * h[2] * f1 * f2 + h[1] * f3;
  r.d[4] = h[4] * f1 * f1 * f1 * f1 + 6.0 * h[3] * f1 * f1 * f2 +
           h[2] * (3.0 * f2 * f2 + 4.0 * f1 * f3) + h[1] * f4;
  return r;
}

inline Jet4 jet_exp(const Jet4& f) {
  double e = std::exp(f.d[0]);
  return compose({e, e, e, e, e}, f);
}

inline Jet4 jet_log(const Jet4& f) {
  double x = f.d[0];
  return compose({std::log(x), 1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x),
                  -6.0 / (x * x * x * x)},
                 f);
}

inline Jet4 jet_recip(const Jet4& f) {
  double x = f.d[0];
  double x2 = x * x;
  return compose({1.0 / x, -1.0 / x2, 2.0 / (x2 * x), -6.0 / (x2 * x2),
                  24.0 / (x2 * x2 * x)},
                 f);
}

inline Jet4 operator/(const Jet4& a, const Jet4& b) { return a * jet_recip(b); }

// f^p for real p; requires f.value() > 0.
inline Jet4 jet_pow(const Jet4& f, double p) {
  double x = f.d[0];
  std::array<double, 5> h;
  h[0] = std::pow(x, p);
  double c = p;
  h[1] = c * std::pow(x, p - 1);
  c *= (p - 1);
  h[2] = c * std::pow(x, p - 2);
  c *= (p - 2);
  h[3] = c * std::pow(x, p - 3);
  c *= (p - 3);
  h[4] = c * std::pow(x, p - 4);
  return compose(h, f);
}

// ---------------------------------------------------------------------------
// Second-order multivariate jets for the ambient (Cartesian) oracle.

template <int N>
struct JetND {
  double v = 0.0;
  std::array<double, N> g{};
  std::array<std::array<double, N>, N> h{};

  static JetND constant(double c) {
    JetND j;
    j.v = c;
    return j;
  }
  static JetND coordinate(double x, int axis) {
    JetND j;
    j.v = x;
    j.g[axis] = 1.0;
    return j;
  }

  double laplacian() const {
    double s = 0.0;
    for (int i = 0; i < N; ++i) s += h[i][i];
    return s;
  }
  double grad_norm_sq() const {
    double s = 0.0;
    for (int i = 0; i < N; ++i) s += g[i] * g[i];
    return s;
  }

  friend JetND operator+(const JetND& a, const JetND& b) {
    JetND r;
    r.v = a.v + b.v;
    for (int i = 0; i < N; ++i) {
      r.g[i] = a.g[i] + b.g[i];
      for (int j = 0; j < N; ++j) r.h[i][j] = a.h[i][j] + b.h[i][j];
    }
    return r;
  }
  friend JetND operator-(const JetND& a, const JetND& b) {
    JetND r;
    r.v = a.v - b.v;
    for (int i = 0; i < N; ++i) {
      r.g[i] = a.g[i] - b.g[i];
      for (int j = 0; j < N; ++j) r.h[i][j] = a.h[i][j] - b.h[i][j];
    }
    return r;
  }
  friend JetND operator*(const JetND& a, const JetND& b) {
    JetND r;
    r.v = a.v * b.v;
    for (int i = 0; i < N; ++i) {
      r.g[i] = a.g[i] * b.v + a.v * b.g[i];
      for (int j = 0; j < N; ++j)
        r.h[i][j] = a.h[i][j] * b.v + a.g[i] * b.g[j] + a.g[j] * b.g[i] + a.v * b.h[i][j];
    }
    return r;
  }
  friend JetND operator*(double k, const JetND& a) {
    JetND r = a;
    r.v *= k;
    for (int i = 0; i < N; ++i) {
      r.g[i] *= k;
      for (int j = 0; j < N; ++j) r.h[i][j] *= k;
    }
    return r;
  }
};

// h∘f for univariate h with derivatives (h0, h1, h2) at f.v.
template <int N>
JetND<N> compose(const std::array<double, 3>& hd, const JetND<N>& f) {
  JetND<N> r;
  r.v = hd[0];
  for (int i = 0; i < N; ++i) {
    r.g[i] = hd[1] * f.g[i];
    for (int j = 0; j < N; ++j) r.h[i][j] = hd[2] * f.g[i] * f.g[j] + hd[1] * f.h[i][j];
  }
  return r;
}

template <int N>
JetND<N> jet_sqrt(const JetND<N>& f) {
  double s = std::sqrt(f.v);
  return compose<N>({s, 0.5 / s, -0.25 / (s * f.v)}, f);
}

template <int N>
JetND<N> jet_pow(const JetND<N>& f, double p) {
  return compose<N>({std::pow(f.v, p), p * std::pow(f.v, p - 1),
                     p * (p - 1) * std::pow(f.v, p - 2)},
                    f);
}

template <int N>
JetND<N> jet_recip(const JetND<N>& f) {
  return compose<N>({1.0 / f.v, -1.0 / (f.v * f.v), 2.0 / (f.v * f.v * f.v)}, f);
}

}  // namespace rellich
