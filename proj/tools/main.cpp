#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const auto outcome = fixfactor::cli::run({argv + 1, argv + argc});
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
