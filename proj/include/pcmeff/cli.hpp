#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcmeff {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInefficient = 2;

/// Runs the command line tool on `args` (without the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace pcmeff
