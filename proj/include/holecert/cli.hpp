#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holecert {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitReject = 1,
  kExitContract = 2,
  kExitUsage = 64,
  kExitIo = 74,
};

/// Runs the tool on `args` (args[0] is the program name).
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace holecert
