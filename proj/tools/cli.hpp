#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace clusterbn::cli {

enum ExitCode : int { kSuccess = 0, kInvalidInput = 1, kUsage = 2 };

/// Runs one invocation; `args` excludes the program name. Returns the exit
/// code: 0 success, 1 parse/validation error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clusterbn::cli
