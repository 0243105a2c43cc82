#include <iostream>
#include <string>
#include <vector>

#include "lowdeg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lowdeg::cli::run(args, std::cin, std::cout, std::cerr);
}
