#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dichro {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,   // a property or certification did not hold
  kExitBudget = 2,
  kExitInvalid = 3,
};

/// Runs one command line (without the program name). Reports go to `out` as
/// JSON, except verify-paper which prints a text table followed by CSV.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dichro
