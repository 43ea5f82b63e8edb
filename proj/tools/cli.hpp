#ifndef UMBRAL_TOOLS_CLI_HPP
#define UMBRAL_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace umbral::cli
{

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse_error = 2,
    exit_precondition = 3,
    exit_verification_failed = 4,
};

// Runs the command line `args` (without the program name), writing results to
// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace umbral::cli

#endif
