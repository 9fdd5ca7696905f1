#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jordan2::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kNumeric = 3 };

/// Runs one command line (without the program name). Output documents go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jordan2::cli
