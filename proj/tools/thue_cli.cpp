#include "thue/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return thue::cli::run(args, std::cout, std::cerr);
}
