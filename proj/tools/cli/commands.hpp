#pragma once

#include <iosfwd>

namespace greedy::cli {

enum ExitCode : int {
  kOk = 0,
  kChecksFailed = 1,
  kUsage = 2,
  kBudget = 3,
};

/// Parses argv and dispatches to the subcommand. Normal output goes to out
/// unless the subcommand writes files; diagnostics go to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace greedy::cli
