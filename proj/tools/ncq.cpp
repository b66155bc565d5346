#include <iostream>
#include <string>
#include <vector>

#include "ncq/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ncq::cli::main_entry(args, std::cout, std::cerr);
}
