#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hhb {

/// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCertificateInvalid = 2;
inline constexpr int kExitBoundViolated = 3;

/// Runs the command line `hhbounds <args...>` (args excludes the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hhb
