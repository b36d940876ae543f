#include <iostream>
#include <string>
#include <vector>

#include "sidi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sidi::cli::run(args, std::cout, std::cerr);
}
