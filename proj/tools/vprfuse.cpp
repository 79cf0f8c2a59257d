#include <iostream>

#include "vprfuse/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vprfuse::cli::run(args, std::cout, std::cerr);
}
