#include <iostream>
#include <string>
#include <vector>

#include "mvs/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return mvs::cli::run(args, std::cout, std::cerr);
}
