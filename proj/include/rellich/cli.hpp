#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rellich {

inline constexpr const char* kToolVersion = "rellich 0.1.0";

// Runs one CLI invocation. Exit codes: 0 success / all verifications pass,
// 1 a verification reported a genuine residual violation, 2 usage or
// constraint error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rellich
