#include <iostream>
#include <string>
#include <vector>

#include "pomax/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pomax::run_cli(args, std::cin, std::cout, std::cerr);
}
