#include <iostream>
#include <string>
#include <vector>

#include "b1grid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return b1grid::run(args, std::cout, std::cerr);
}
