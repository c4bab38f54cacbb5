#include <iostream>

#include "equifacet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return equifacet::run_cli(args, std::cout, std::cerr);
}
