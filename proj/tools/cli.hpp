#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spin7::cli {

enum ExitCode { kOk = 0, kVerificationFailure = 1, kInputError = 2 };

// Runs the command line `args` (without the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spin7::cli
