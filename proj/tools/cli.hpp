#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricquiver::cli {

/// Exit codes shared by every command.
enum ExitStatus : int { kOk = 0, kFailure = 1, kMalformedInput = 2, kInternalError = 3 };

/// Runs the command line `args` (without the program name). "-" as a path
/// reads `in`. Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace toricquiver::cli
