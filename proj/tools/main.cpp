#include <iostream>
#include <string>
#include <vector>

#include "cgadg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cgadg::run(args, std::cout, std::cerr);
}
