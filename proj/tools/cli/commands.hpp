#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psop::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

// Runs one command line (without the program name). The payload goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psop::cli
