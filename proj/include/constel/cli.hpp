#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace constel::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int { kOk = 0, kIdentityViolation = 1, kUsage = 2 };

/// Runs one command (args exclude the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace constel::cli
