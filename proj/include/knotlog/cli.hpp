#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knotlog {

// Exit codes of the command line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitDomain = 3,
  kExitResource = 4,
};

// Runs one invocation. args excludes the program name. Results go to out
// (or the --output file); diagnostics go to err as a single line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotlog
