#include <iostream>
#include <string>
#include <vector>

#include "vfs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vfs::run_cli(args, std::cout, std::cerr);
}
