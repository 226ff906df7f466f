#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dyckframe::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceLimit = 3,
};

/// Runs the command line `args` (args[0] is the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dyckframe::cli
