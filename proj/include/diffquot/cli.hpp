#pragma once

#include <span>
#include <string>
#include <vector>

namespace dq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandOutcome {
  int exit_code = kExitOk;
  std::string payload;
};

/// Runs one command line. `args` excludes the program name. Never throws;
/// usage and parse problems come back as exit code 2.
///
///   expand  --r R [--json]
///   apply   --r R --f POLY --g POLY [--json]
///   multi   --r R --factors POLY,POLY,... [--json]
///   verify  --theorem {1.1|1.3|inversion|egf} --r R [--n N] --trials T --seed S
///   numeric --f NAME --g NAME --r R --lambda X --x0 A --step H --count C --tol E [--json]
CommandOutcome run_command(std::span<const std::string> args);

}  // namespace dq::cli
