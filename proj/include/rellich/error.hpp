#pragma once

#include <stdexcept>
#include <string>

namespace rellich {

// Structured error categories surfaced through the CLI exit-code contract:
// constraint/usage problems map to exit 2, genuine verification failures to
// exit 1.
enum class ErrorKind {
  DegreeOverflow,
  ZeroPolynomial,
  InvalidOperatorSpec,
  IrreducibleTerm,
  MissingBasisValue,
  RelaxTargetAbsent,
  UnboundedObjective,
  ConstraintViolation,
  QuadratureFailure,
  InsufficientDerivatives,
  CoveringViolation,
  SingularEvaluation,
  Admissibility,
  BadArguments,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // Usage and constraint problems, as opposed to internal failures.
  bool is_usage() const {
    return kind_ == ErrorKind::ConstraintViolation ||
           kind_ == ErrorKind::BadArguments ||
           kind_ == ErrorKind::Admissibility ||
           kind_ == ErrorKind::CoveringViolation;
  }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind);

}  // namespace rellich
