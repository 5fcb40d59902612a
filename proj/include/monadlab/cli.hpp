#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace monadlab::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { verified = 0, falsified = 1, bad_input = 2 };

/// Runs one command line (without the program name). Machine-readable output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monadlab::cli
