#include <iostream>

#include "numsg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return numsg::cli::run(args, std::cout, std::cerr);
}
