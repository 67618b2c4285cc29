#include <iostream>
#include <string>
#include <vector>

#include "stagedtrees/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stagedtrees::run_cli(args, std::cout, std::cerr);
}
