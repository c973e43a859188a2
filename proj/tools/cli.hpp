#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kchord::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_mismatch = 1,
  exit_invalid_config = 2,
  exit_budget_exceeded = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kchord::cli
