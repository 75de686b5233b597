#pragma once

#include <iosfwd>

namespace fastmis {

// Command-line front end: solve, verify, speedup, quality-time, kernel-stats.
// Returns the process exit status; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fastmis
