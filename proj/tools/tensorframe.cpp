#include <iostream>
#include <string>
#include <vector>

#include "tensorframe/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return tensorframe::cli::run(args, std::cout, std::cerr);
}
