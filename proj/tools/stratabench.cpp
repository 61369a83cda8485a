#include <iostream>
#include <string>
#include <vector>

#include "stratabench/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return strata::run_cli(args, std::cout, std::cerr);
}
