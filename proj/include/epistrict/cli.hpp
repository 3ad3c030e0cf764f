#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace epistrict {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  /// Axiom failure, non-isotropic input, guard exceeded, failed comparison.
  kExitFailure = 1,
  /// Parse or usage error, non-prime d.
  kExitUsage = 2,
  /// d = 2, where one half does not exist.
  kExitCharacteristicTwo = 3,
};

/// Runs the tool on `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace epistrict
