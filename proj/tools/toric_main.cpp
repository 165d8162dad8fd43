#include <iostream>
#include <string>
#include <vector>

#include "toric/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const toric::cli::CommandResult result = toric::cli::run(args, std::cin);
  std::cout << toric::cli::render(result) << '\n';
  return result.exit_code;
}
