#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  oreaut::cli::RunResult r = oreaut::cli::run_args(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
