#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace riparian::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatchOrViolation = 1,
  kUsageOrValidation = 2,
};

/// Entry point behind the `riparian` binary. `args` excludes the program
/// name. Never throws; every failure maps to an exit code with a one-line
/// diagnostic on `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace riparian::cli
