#include <iostream>
#include <string>
#include <vector>

#include "graphstat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return graphstat::cli::run(args, std::cout, std::cerr);
}
