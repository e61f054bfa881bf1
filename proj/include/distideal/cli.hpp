#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace distideal {

enum ExitCode : int { kSuccess = 0, kBadInput = 1, kVerificationFailed = 2 };

/// Runs the command line `args` (without the program name), writing
/// records to `out` and diagnostics to `err`. Returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace distideal
