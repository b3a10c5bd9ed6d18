#include <iostream>

#include "riparian/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return riparian::cli::run_cli(args, std::cout, std::cerr);
}
