#include <iostream>

#include "geospin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return geospin::cli::run(args, std::cout, std::cerr);
}
