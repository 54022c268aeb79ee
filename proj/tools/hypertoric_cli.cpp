#include <iostream>
#include <string>
#include <vector>

#include "cli_core.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = hypertoric::cli::run_command(std::move(args));
  if (!result.out.empty()) std::cout << result.out;
  if (!result.err.empty()) std::cerr << result.err;
  return result.exit_code;
}
