#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pullback::cli {

enum ExitCode : int {
  kPassed = 0,
  kCheckFailed = 1,
  kInputError = 2,
};

/// Runs one pullback-lab invocation. `args` excludes the program name.
/// Reports go to `out`, diagnostics and usage to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pullback::cli
