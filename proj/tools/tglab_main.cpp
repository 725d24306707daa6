#include <iostream>
#include <vector>

#include "tglab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tglab::run_cli(args, std::cout, std::cerr);
}
