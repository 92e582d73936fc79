#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtriv {

// Exit codes of run_cli.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 1,     // invalid structure, parse failure, malformed file
  kExitUsage = 2,
  kExitUnknownName = 3,
  kExitResource = 4,   // a configured size cap was exceeded
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtriv
