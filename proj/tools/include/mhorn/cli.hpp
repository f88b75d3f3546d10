#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mhorn::cli {

enum ExitCode : int {
  kPass = 0,
  kMathFail = 1,
  kUsageError = 2,
  kNumericalError = 3,
};

/// Runs one command line (args excludes the program name). Results go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mhorn::cli
