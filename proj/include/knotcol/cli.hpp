#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotcol {

/// Process exit codes of the knotcol command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitParse = 2, ///< bad arguments or unreadable input
  kExitHypothesis = 3,
  kExitLimit = 4,
  kExitOther = 5,
};

/// Runs the tool; args[0] is the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace knotcol
