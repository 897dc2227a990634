#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace antipodal::cli {

enum ExitCode { Ok = 0, VerificationFailed = 1, UsageError = 2, SolverTimeout = 3 };

/// Runs one CLI invocation. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antipodal::cli
