#include <iostream>
#include <string>
#include <vector>

#include "tcedit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tcedit::run_cli(args, std::cout, std::cerr);
}
