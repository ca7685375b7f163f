#ifndef THETASUM_CLI_HPP
#define THETASUM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace thetasum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a check failed, or a guard was violated
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (program name first). Machine output goes
/// to `out`, diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace thetasum::cli

#endif
