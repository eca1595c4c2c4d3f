#ifndef SALLY_CLI_HPP
#define SALLY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sally::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    ok = 0,
    verification_failed = 1,
    certification_failed = 2,  // Q not a reduction, I not m-primary, unstable fit, cap exceeded
    parse_failed = 3,
    usage_error = 4,
};

/// Runs the tool on argv[1..] and returns the exit code. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sally::cli

#endif  // SALLY_CLI_HPP
