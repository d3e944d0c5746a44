#pragma once

#include <iosfwd>

namespace herbrand::cli {

/// Exit codes of the command line tool.
enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs the tool on argv, writing results to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace herbrand::cli
