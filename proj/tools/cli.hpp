#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chromadisc::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kUsage = 2,
  kBudget = 3,
};

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`; `in` feeds `convert` when no file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace chromadisc::cli
