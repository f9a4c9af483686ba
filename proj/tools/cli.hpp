#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matcon::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kCapExceeded = 3 };

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matcon::cli
