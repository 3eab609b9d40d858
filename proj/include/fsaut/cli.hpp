#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fsaut::cli {

enum ExitCode : int {
  Success = 0,
  VerificationFailed = 1,
  InputError = 2,
  BudgetExhausted = 3,
};

/// Runs one command. `args` excludes the program name. Input files named
/// "-" (the default) are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fsaut::cli
