#ifndef QREAL_CLI_HPP
#define QREAL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qreal {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitDomain = 2,
    kExitNonConvergence = 3,
    kExitIdentityFailure = 4,
};

/// Runs the tool on `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qreal

#endif
