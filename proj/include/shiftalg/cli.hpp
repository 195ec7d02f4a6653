#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftalg {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitMath = 3, kExitIo = 4 };

/// Runs one CLI invocation. `args` excludes the program name. Normal output
/// goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shiftalg
