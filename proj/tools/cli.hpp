#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qset::cli {

/// Exit codes of the qset tool.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,        ///< internal invariant or arithmetic failure
  kUsage = 2,          ///< bad flags, parse errors, unsupported specs
  kBudget = 3,         ///< search or enumeration budget exhausted
  kVerifyMismatch = 4, ///< --verify found a closed form that disagrees
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qset::cli
