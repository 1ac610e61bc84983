#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperbetti {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitResourceLimit = 3;

// Runs the command line (without argv[0]) and returns the process exit code.
// All normal output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace hyperbetti
