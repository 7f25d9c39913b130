#include <iostream>
#include <string>
#include <vector>

#include "htc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return htc::cli::run(args, std::cout, std::cerr);
}
