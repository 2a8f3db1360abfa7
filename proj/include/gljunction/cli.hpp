#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gljunction::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int { ok = 0, config_error = 2, numerical_failure = 3 };

/// Runs one subcommand. `args` excludes the program name, so args[0] is the
/// subcommand: profile, solve, eigen, sweep or asymptotics.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gljunction::cli
