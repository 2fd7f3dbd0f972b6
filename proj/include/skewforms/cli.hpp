#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skewforms {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2 };

/// Runs one command; args excludes the program name. Output is deterministic
/// for fixed inputs, primes and seed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewforms
