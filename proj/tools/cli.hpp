#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agp::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kUsage = 2, kInconclusive = 3 };

/// Runs the command line `args` (without the program name). Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agp::cli
