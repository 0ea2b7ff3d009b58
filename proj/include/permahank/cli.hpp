#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permahank {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2 };

/// Runs one command line (program name excluded). Regular output goes to
/// out (or the --out file), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permahank
