#pragma once

#include <iosfwd>

namespace twinless {

/// Exit statuses of the command-line front end.
enum ExitStatus : int {
  kExitOk = 0,
  kExitPrecondition = 1,  // input violates the subcommand's precondition; witness on stderr
  kExitParse = 2,         // malformed input file or command line
  kExitMismatch = 3,      // --check found the fast path and the oracle disagreeing
};

/// Runs one command line (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twinless
