#pragma once

#include <iosfwd>

namespace wada::cli {

enum ExitCode : int {
  kOk = 0,
  kFixtureFailure = 1,
  kUsage = 2,
  kInternal = 3,
  kBudget = 4,
  kSizeGuard = 5,
};

/// Runs one invocation of the `wada` tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wada::cli
