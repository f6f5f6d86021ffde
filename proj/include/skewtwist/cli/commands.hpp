#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "skewtwist/errors.hpp"

namespace skewtwist::cli {

enum ExitCode : int {
  kOk = 0,
  kAxiomViolation = 1,
  kFormatError = 2,
  kBudgetExceeded = 3,
};

ExitCode exit_code_for(ErrorKind kind);

/// Runs one invocation of the tool. `args` excludes the program name; "-"
/// as a file name means `in` or `out`. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace skewtwist::cli
