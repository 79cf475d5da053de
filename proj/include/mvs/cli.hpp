#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvs::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kInvariantViolation = 3,
  kPreconditionFailure = 4,
};

/// Runs one command line (args[0] is the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvs::cli
