#pragma once

#include <iosfwd>

namespace dihom::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParseError = 2,
    kDomainError = 3,
    kViolation = 4,
};

/// Runs the command line in-process; output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dihom::cli
