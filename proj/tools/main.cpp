#include <iostream>
#include <string>
#include <vector>

#include "bessel_interlace/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bessel::run_cli(args, std::cout, std::cerr);
}
