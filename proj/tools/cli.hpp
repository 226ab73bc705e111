#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twoloop::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kConsistency = 3 };

/// Environment variable naming the directory for relative --out paths.
inline constexpr const char* kOutputDirEnv = "TWOLOOP_OUTPUT_DIR";

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twoloop::cli
