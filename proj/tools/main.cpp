#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = hypergen::cli::run(args, hypergen::cli::Environment::from_process());
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
