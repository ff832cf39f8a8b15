#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zigzag::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
    kSuccess = 0,
    kIdentityFailure = 1,
    kUsageError = 2,
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace zigzag::cli
