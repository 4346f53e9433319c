#include <iostream>
#include <string>
#include <vector>

#include "homonym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return homonym::cli::run(args, std::cout, std::cerr);
}
