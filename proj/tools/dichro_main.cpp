#include <iostream>

#include "dichro/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dichro::run_cli(args, std::cout, std::cerr);
}
