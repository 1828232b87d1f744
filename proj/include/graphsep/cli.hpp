#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphsep {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitPropertyFalse = 1,
  kExitPrecondition = 2,
  kExitCertificate = 3,
  kExitIo = 4,
};

// Runs `graphsep <args...>` (args exclude the program name) and returns the
// exit code. All output goes to `out` and `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphsep
