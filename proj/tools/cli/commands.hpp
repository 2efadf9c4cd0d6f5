#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace molecule::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit status: 0 success, 1 failed verification, 2 usage or
/// configuration error. Normal output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace molecule::cli
