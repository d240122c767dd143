#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rellich/form_reduction.hpp"
#include "rellich/profiles.hpp"
#include "rellich/quadrature.hpp"

namespace rellich {

// Parameters a catalog inequality may need. γ is the iterated-log scale,
// given numerically relative to the outermost profile support.
struct VerifyParams {
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  std::optional<Rational> s;
  int m = 0;
  double gamma = 0.0;  // 0 = auto (e^4 × support radius)
};

// One catalog inequality instantiated at a dimension: LHS and RHS as basis
// forms, or a log-weight RHS for the iterated-log member.
struct InequalityStatement {
  std::string id;
  QuadraticForm lhs;
  QuadraticForm rhs;
  bool log_weight_rhs = false;
  int log_m = 0;
};

// Catalog ids in canonical order.
const std::vector<std::string>& inequality_catalog();

// Dimension grid {2,3,4,5,7,8,10} (or {1}) filtered by validity.
std::vector<int> valid_dimensions(const std::string& id);
bool dimension_valid(const std::string& id, int dim);

// Parameter grids used by the default suites; empty bindings for constant
// inequalities.
std::vector<VerifyParams> default_param_grid(const std::string& id, int dim);

// Builds the statement after validating dimension and parameter constraints
// (ConstraintViolation on failure).
InequalityStatement catalog_statement(const std::string& id, const VerifyParams& params,
                                      int dim);

struct ProfileVerdict {
  std::string profile;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;      // lhs - rhs
  double error_bound = 0.0;   // quadrature error estimate
  bool pass = false;
};

struct VerificationReport {
  std::string inequality;
  std::string params;
  int dim = 0;
  double tol_rel = 1e-9;
  std::vector<ProfileVerdict> rows;
  double min_residual = 0.0;
  bool pass = false;
};

VerificationReport verify_inequality(const std::string& id, const VerifyParams& params,
                                     int dim, const std::vector<TestProfile>& profiles,
                                     double tol_rel = 1e-9,
                                     const QuadratureOptions& opts = {});

// All catalog inequalities on their default grids and suites, aggregated in
// catalog order. Jobs execute independently.
std::vector<VerificationReport> verify_catalog(double tol_rel = 1e-9,
                                               const QuadratureOptions& opts = {});

struct SharpnessPoint {
  double width = 0.0;  // log half-width M
  double ratio = 0.0;  // LHS / weighted RHS integral
};

// Near-extremal power-cutoff sweep for the optimal-constant inequalities
// (ids "2.10", "2.25", "2.33").
std::vector<SharpnessPoint> sharpness_sweep(const std::string& id, int dim,
                                            const std::vector<double>& widths,
                                            const QuadratureOptions& opts = {});

// Optimal constant targeted by a sharpness sweep.
Rational sharpness_constant(const std::string& id, int dim);

std::string report_to_json(const std::vector<VerificationReport>& reports,
                           const std::map<std::string, std::string>& config);
std::string report_to_csv(const std::vector<VerificationReport>& reports);
std::string sweep_to_csv(const std::string& id, int dim,
                         const std::vector<SharpnessPoint>& points);

}  // namespace rellich
