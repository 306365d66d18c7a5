#include <iostream>
#include <string>
#include <vector>

#include "cuntz/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cuntz::cli::run(args, std::cout, std::cerr);
}
