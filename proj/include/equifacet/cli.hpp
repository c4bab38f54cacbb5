#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace equifacet {

/// Exit statuses shared by every subcommand.
enum ExitStatus : int {
  kExitOk = 0,
  kExitNegative = 1,
  kExitInputError = 2,
  kExitUnknown = 3,
};

/// Runs the command line `args` (program name excluded) and returns the exit status.
/// Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equifacet
