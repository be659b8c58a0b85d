#pragma once

#include <ostream>

namespace permstat::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kResource = 3,
  kConsistency = 4,
};

// Runs one invocation; argv[0] is the program name. Output goes to `out`,
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace permstat::cli
