#include <iostream>
#include <string>
#include <vector>

#include "kcon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kcon::cli::run(std::move(args), std::cin, std::cout, std::cerr);
}
