#pragma once

#include <string>
#include <vector>

namespace fcw::cli {

struct CommandResult {
  int exit_code = 0;  // 0 success, 1 domain error, 2 usage or parse error
  std::string out;    // canonical payload
  std::string err;    // one-line diagnostic
};

/// Runs one command. `args` excludes the program name. Input paths of `-`
/// read standard input.
CommandResult run(const std::vector<std::string>& args);

}  // namespace fcw::cli
