// The `fh` command line, callable in-process so tests can check exit codes
// and output without spawning a binary.
//
// Exit codes: 0 success or decided-positive, 1 decided-negative,
// 2 usage error, 3 verification failure.

#pragma once

#include <string>
#include <vector>

namespace fh::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kVerifyFailed = 3 };

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace fh::cli
