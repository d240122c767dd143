#include "rellich/localization.hpp"

#include "rellich/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace rellich {

namespace {

// Radial profile of the base bump: 1 on [0, 1/2], 0 beyond 1, C^∞ between.
Jet4 base_bump(double rho) {
  if (rho <= 0.5) return Jet4::constant(1.0);
  if (rho >= 1.0) return Jet4::constant(0.0);
  Jet4 t = 2.0 * Jet4::variable(rho) - Jet4::constant(1.0);
  return smooth_step_down(t);
}

double dist(const Point& a, const Point& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

std::string point_to_string(const Point& x) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ")";
  return os.str();
}

// Distance from x to the convex hull of `points` by Frank-Wolfe on
// min ||x - y||² over the hull; ample iterations for desk-scale layouts.
double hull_distance(const Point& x, const std::vector<Point>& points) {
  size_t n = x.size();
  Point y = points.front();
  for (int iter = 0; iter < 256; ++iter) {
    // Vertex maximizing <x - y, v>.
    const Point* best = nullptr;
    double best_dot = -std::numeric_limits<double>::infinity();
    for (const Point& v : points) {
      double dot = 0.0;
      for (size_t i = 0; i < n; ++i) dot += (x[i] - y[i]) * v[i];
      if (dot > best_dot) {
        best_dot = dot;
        best = &v;
      }
    }
    double step = 2.0 / (iter + 2.0);
    for (size_t i = 0; i < n; ++i) y[i] += step * ((*best)[i] - y[i]);
  }
  return dist(x, y);
}

}  // namespace

BumpPartition::BumpPartition(std::vector<Point> centers, int dim, int covering_samples_per_axis)
    : centers_(std::move(centers)), dim_(dim) {
  if (centers_.empty()) throw Error(ErrorKind::BadArguments, "partition needs centers");
  for (const Point& c : centers_)
    if (static_cast<int>(c.size()) != dim_)
      throw Error(ErrorKind::BadArguments, "center dimension mismatch");
  for (size_t i = 0; i < centers_.size(); ++i)
    for (size_t j = i + 1; j < centers_.size(); ++j)
      if (dist(centers_[i], centers_[j]) <= 0.0)
        throw Error(ErrorKind::BadArguments, "coincident partition centers");

  // Covering condition Σ φ(x-x_j)² >= 1/2 on a grid of the working region.
  for (const Point& x : region_grid(*this, covering_samples_per_axis)) {
    double sum = 0.0;
    for (const Point& c : centers_) {
      double v = base_bump(dist(x, c)).value();
      sum += v * v;
    }
    if (sum < 0.5)
      throw Error(ErrorKind::CoveringViolation,
                  "covering Σφ² >= 1/2 fails at " + point_to_string(x) +
                      " (Σφ² = " + std::to_string(sum) + ")");
  }
}

std::pair<Point, Point> BumpPartition::bounding_box() const {
  Point lo(dim_, std::numeric_limits<double>::infinity());
  Point hi(dim_, -std::numeric_limits<double>::infinity());
  for (const Point& c : centers_) {
    for (int i = 0; i < dim_; ++i) {
      lo[i] = std::min(lo[i], c[i] - 0.5);
      hi[i] = std::max(hi[i], c[i] + 0.5);
    }
  }
  return {lo, hi};
}

bool BumpPartition::in_working_region(const Point& x, double tolerance) const {
  return hull_distance(x, centers_) <= 0.5 + tolerance;
}

std::vector<Point> region_grid(const BumpPartition& partition, int per_axis) {
  auto [lo, hi] = partition.bounding_box();
  int dim = partition.dim();
  std::vector<Point> out;
  std::vector<int> idx(dim, 0);
  while (true) {
    Point x(dim);
    for (int i = 0; i < dim; ++i) {
      double t = per_axis == 1 ? 0.5 : static_cast<double>(idx[i]) / (per_axis - 1);
      x[i] = lo[i] + t * (hi[i] - lo[i]);
    }
    if (partition.in_working_region(x)) out.push_back(std::move(x));
    int axis = 0;
    while (axis < dim && ++idx[axis] == per_axis) idx[axis++] = 0;
    if (axis == dim) break;
  }
  return out;
}

BumpPartition::Eval BumpPartition::evaluate(size_t j, const Point& x) const {
  // ψ_c = φ(x - x_c), N = Σ ψ_c², φ_j = ψ_j N^(-1/2).
  size_t count = centers_.size();
  std::vector<double> psi(count), dpsi(count), lap_psi(count);
  std::vector<std::vector<double>> grad_psi(count, std::vector<double>(dim_, 0.0));
  for (size_t c = 0; c < count; ++c) {
    double rho = dist(x, centers_[c]);
    Jet4 s = base_bump(rho);
    psi[c] = s.d[0];
    dpsi[c] = s.d[1];
    if (rho > 1e-12) {
      for (int i = 0; i < dim_; ++i)
        grad_psi[c][i] = s.d[1] * (x[i] - centers_[c][i]) / rho;
      lap_psi[c] = s.d[2] + (dim_ - 1) * s.d[1] / rho;
    } else {
      lap_psi[c] = dim_ * s.d[2];  // radial profile is flat at the center
    }
  }
  double n_val = 0.0;
  std::vector<double> grad_n(dim_, 0.0);
  double lap_n = 0.0;
  for (size_t c = 0; c < count; ++c) {
    n_val += psi[c] * psi[c];
    double g2 = 0.0;
    for (int i = 0; i < dim_; ++i) {
      grad_n[i] += 2.0 * psi[c] * grad_psi[c][i];
      g2 += grad_psi[c][i] * grad_psi[c][i];
    }
    lap_n += 2.0 * (g2 + psi[c] * lap_psi[c]);
  }
  if (n_val <= 0.0)
    throw Error(ErrorKind::CoveringViolation,
                "normalizer vanishes at " + point_to_string(x));

  double inv_sqrt = 1.0 / std::sqrt(n_val);
  double inv_32 = inv_sqrt / n_val;
  double inv_52 = inv_32 / n_val;
  double grad_n_sq = 0.0;
  double grad_dot = 0.0;
  for (int i = 0; i < dim_; ++i) {
    grad_n_sq += grad_n[i] * grad_n[i];
    grad_dot += grad_psi[j][i] * grad_n[i];
  }

  Eval out;
  out.value = psi[j] * inv_sqrt;
  out.gradient.resize(dim_);
  for (int i = 0; i < dim_; ++i)
    out.gradient[i] = grad_psi[j][i] * inv_sqrt - 0.5 * psi[j] * inv_32 * grad_n[i];
  out.laplacian = lap_psi[j] * inv_sqrt - grad_dot * inv_32 +
                  psi[j] * (-0.5 * inv_32 * lap_n + 0.75 * inv_52 * grad_n_sq);
  return out;
}

BumpPartition::Sums BumpPartition::sums_at(const Point& x) const {
  Sums s;
  for (size_t j = 0; j < centers_.size(); ++j) {
    Eval e = evaluate(j, x);
    s.square_sum += e.value * e.value;
    double g = 0.0;
    for (double gi : e.gradient) g += gi * gi;
    s.grad_sum += g;
    s.lap_sum += e.laplacian * e.laplacian;
  }
  return s;
}

PartitionFunctionals partition_functionals(const BumpPartition& partition,
                                           const std::vector<Point>& grid,
                                           Execution execution) {
  PartitionFunctionals out;
  out.samples = grid.size();
  int count = static_cast<int>(grid.size());
  double sup_grad = 0.0, sup_lap = 0.0, defect = 0.0;
  if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(static) reduction(max : sup_grad, sup_lap, defect)
    for (int i = 0; i < count; ++i) {
      BumpPartition::Sums s = partition.sums_at(grid[i]);
      sup_grad = std::max(sup_grad, s.grad_sum);
      sup_lap = std::max(sup_lap, s.lap_sum);
      defect = std::max(defect, std::abs(s.square_sum - 1.0));
    }
  } else {
    for (int i = 0; i < count; ++i) {
      BumpPartition::Sums s = partition.sums_at(grid[i]);
      sup_grad = std::max(sup_grad, s.grad_sum);
      sup_lap = std::max(sup_lap, s.lap_sum);
      defect = std::max(defect, std::abs(s.square_sum - 1.0));
    }
  }
  out.sup_grad_sum = sup_grad;
  out.sup_lap_sum = sup_lap;
  out.max_square_defect = defect;
  return out;
}

MorganResult morgan_ledger(const MorganLedger& ledger) {
  if (ledger.a.sign() < 0 || ledger.b.sign() < 0 || ledger.e.sign() < 0 ||
      ledger.c.sign() <= 0 || ledger.d.sign() <= 0)
    throw Error(ErrorKind::BadArguments,
                "ledger requires a, b, e >= 0 and c, d > 0");
  MorganResult out;
  out.form_bound = ledger.a * ledger.c * ledger.d;
  out.offset = ledger.a * ledger.c * ledger.e + ledger.b * ledger.c;
  out.strictly_less_than_one = out.form_bound < Rational(1);
  return out;
}

SingularPotentialW0::SingularPotentialW0(std::vector<Point> centers,
                                         std::vector<double> couplings, double gamma_bound,
                                         double decay, int dim)
    : centers_(std::move(centers)),
      couplings_(std::move(couplings)),
      gamma_(gamma_bound),
      delta_(decay),
      dim_(dim) {
  if (dim_ < 5)
    throw Error(ErrorKind::Admissibility, "strongly singular potentials require n >= 5");
  if (centers_.size() != couplings_.size())
    throw Error(ErrorKind::BadArguments, "one coupling per center required");
  if (!(delta_ > 0.0)) throw Error(ErrorKind::BadArguments, "decay δ must be positive");
  double rellich = std::pow(dim_ * (dim_ - 4) / 4.0, 2);
  if (!(gamma_ < rellich))
    throw Error(ErrorKind::Admissibility,
                "coupling bound γ must satisfy γ < [n(n-4)/4]² = " + std::to_string(rellich));
  for (double g : couplings_) {
    if (std::abs(g) > gamma_)
      throw Error(ErrorKind::Admissibility,
                  "coupling exceeds the bound γ = " + std::to_string(gamma_));
  }
  for (size_t i = 0; i < centers_.size(); ++i)
    for (size_t j = i + 1; j < centers_.size(); ++j)
      if (dist(centers_[i], centers_[j]) <= 0.0)
        throw Error(ErrorKind::BadArguments, "coincident singular centers");
}

double SingularPotentialW0::operator()(const Point& x) const {
  double sum = 0.0;
  for (size_t j = 0; j < centers_.size(); ++j) {
    double r = dist(x, centers_[j]);
    if (r <= 0.0)
      throw Error(ErrorKind::SingularEvaluation,
                  "W₀ evaluated at a singular center " + point_to_string(centers_[j]));
    sum += couplings_[j] * std::exp(-delta_ * r) / (r * r * r * r);
  }
  return sum;
}

FormBoundCheck w0_form_bound_check(const SingularPotentialW0& w0,
                                   const std::vector<TestProfile>& profiles,
                                   const QuadratureOptions& opts) {
  if (w0.centers().size() != 1)
    throw Error(ErrorKind::BadArguments, "form-bound spot check expects a lone singularity");
  int n = w0.dim();
  double rellich = std::pow(n * (n - 4) / 4.0, 2);
  FormBoundCheck out;
  out.leading_coefficient = w0.gamma_bound() / rellich;
  out.leading_below_one = out.leading_coefficient < 1.0;
  double coupling = w0.couplings()[0];
  double delta = w0.decay();

  double max_deficit = 0.0;
  for (const TestProfile& p : profiles) {
    if (p.dim != n || p.ell != 0)
      throw Error(ErrorKind::BadArguments, "spot check wants radial profiles in dimension n");
    IntegralSet ints =
        basis_integrals(p, {FormBasisElement::lap2(), FormBasisElement::val(0)}, opts);
    auto w_integrand = [&](double r) {
      Jet4 phi = p.jet(r);
      double w = coupling * std::exp(-delta * r) / (r * r * r * r);
      return w * phi.d[0] * phi.d[0] * std::pow(r, n - 1);
    };
    IntegralEstimate west =
        integrate_radial(w_integrand, p.radial->lo(), p.radial->hi(), opts);
    double deficit = west.value - out.leading_coefficient * ints.value(FormBasisElement::lap2());
    double offset = deficit / ints.value(FormBasisElement::val(0));
    max_deficit = std::max(max_deficit, offset);
  }
  out.fitted_offset = max_deficit;
  return out;
}

}  // namespace rellich
