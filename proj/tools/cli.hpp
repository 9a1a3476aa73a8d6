#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fixfactor::cli {

struct Command {
  std::string name;
  // System file path, or the ladder term for ladder and window.
  std::string input;
  std::string format = "json";
  std::vector<std::string> checks;
  std::string set;
  std::string by = "stationary";
  std::string max_degree = "w*2";
  std::vector<std::string> locators;
  bool audit = false;
  unsigned nesting_cap = 6;
  unsigned family_cut = 3;
  unsigned strand_cut = 3;
  std::string output;
  std::size_t points = 3;
  bool up_to_iso = false;
  std::size_t jobs = 1;
  // Filled for --help; execute prints it.
  std::string help;
};

// Throws Error(E_USAGE) on malformed arguments. args excludes the program
// name.
Command parse_args(const std::vector<std::string>& args);

struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// 0 on success, 1 when a check fails, 2 on usage, format or IO errors.
Outcome execute(const Command& cmd);

// parse_args + execute, with usage errors mapped to exit code 2.
Outcome run(const std::vector<std::string>& args);

}  // namespace fixfactor::cli
