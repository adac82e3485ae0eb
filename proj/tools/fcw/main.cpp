#include <iostream>

#include "fcw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = fcw::cli::run(args);
  std::cout << result.out;
  if (!result.err.empty()) std::cerr << result.err << '\n';
  return result.exit_code;
}
