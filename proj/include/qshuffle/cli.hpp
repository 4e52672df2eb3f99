#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qshuffle {

enum ExitCode { exit_ok = 0, exit_usage = 1, exit_theory = 2 };

/// Runs the command line front end. args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qshuffle
