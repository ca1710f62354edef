#pragma once

#include <string>
#include <vector>

namespace cohring {

struct CommandResult {
  int exit_code = 0;  // 0 success, 1 domain error, 2 usage error
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name). Never throws.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace cohring
