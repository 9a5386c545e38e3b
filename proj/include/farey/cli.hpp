#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace farey::cli {

enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1,
    kUsage = 2,
    kCapExceeded = 3,
    kTruncationExhausted = 4,
};

/// Runs the `farey` command line. `args` excludes the program name.
/// Payload goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace farey::cli
