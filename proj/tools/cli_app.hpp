#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace permcheb::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kResourceCap = 3,
};

/// Runs the command line (without the program name) and returns the exit
/// status; reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permcheb::cli
