#pragma once

#include <iosfwd>

namespace difflat::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_claim_failed = 1,
    exit_usage = 2,
};

/// Runs one command line; output goes to out, diagnostics to err.
auto run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;

} // namespace difflat::cli
