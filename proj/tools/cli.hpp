#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace torsionlab::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNumeric = 2 };

/// Runs one CLI invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torsionlab::cli
