#include <iostream>

#include "fsaut/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fsaut::cli::run(args, std::cin, std::cout, std::cerr);
}
