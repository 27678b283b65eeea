#include <iostream>
#include <string>
#include <vector>

#include "subsetmetric/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return subsetmetric::cli::run(args, std::cout, std::cerr);
}
