#include <iostream>
#include <string>
#include <vector>

#include "su2holevo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return su2holevo::cli::run(args, std::cout, std::cerr);
}
