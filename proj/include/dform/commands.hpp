#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dform {

/// Exit codes of run_command.
enum ExitCode : int {
  kAllClaimsHold = 0,
  kSomeClaimFails = 1,
  kUsageError = 2,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dform
