#pragma once

#include <iosfwd>

namespace qn::app {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,  // I/O and anything unexpected
    exit_config = 2,   // bad flags, config syntax or validation, violated preconditions
    exit_numeric = 3,  // numerical failure (no root, degenerate readout, ...)
};

/// Entry point of the `qn` executable.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qn::app
