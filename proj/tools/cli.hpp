#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rggdim::cli {

enum ExitCode : int {
  kSuccess = 0,
  kIoError = 1,
  kUsageError = 2,
  kParseError = 3,
  kDegenerateVariance = 4,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rggdim::cli
