#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lerchzeta::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kContradiction = 1,
  kDomain = 2,
  kNonConvergence = 3,
};

/// Runs the tool on args (without the program name). Results go to out (or
/// to the --out file), diagnostics and timing to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lerchzeta::cli
