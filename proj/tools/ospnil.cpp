#include <iostream>
#include <string>
#include <vector>

#include "ospnil/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ospnil::cli::main_entry(args, std::cin, std::cout, std::cerr);
}
