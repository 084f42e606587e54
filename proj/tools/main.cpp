#include <iostream>
#include <string>
#include <vector>

#include "cylint/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cylint::cli::run(args, std::cout, std::cerr);
}
