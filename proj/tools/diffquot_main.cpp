#include <iostream>
#include <string>
#include <vector>

#include "diffquot/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = dq::cli::run_command(args);
  (outcome.exit_code == dq::cli::kExitUsage ? std::cerr : std::cout) << outcome.payload;
  return outcome.exit_code;
}
