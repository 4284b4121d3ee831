#include <iostream>
#include <string>
#include <vector>

#include "diampreserve/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return diampreserve::cli::run(args, std::cin, std::cout, std::cerr);
}
