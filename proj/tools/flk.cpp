#include <iostream>
#include <string>
#include <vector>

#include "flk/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = flk::cli::run(args);
  (outcome.exit_code == 0 ? std::cout : std::cerr) << outcome.payload;
  return outcome.exit_code;
}
