#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dlsched::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kIoFailure = 1,   ///< unreadable/unwritable file or malformed instance file
    kBadFlags = 2,    ///< invalid or inconsistent command-line flags
    kGuardTripped = 3 ///< exhaustive search refused; rerun with --force
};

/// Runs `dlsched <args...>` (args exclude the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dlsched::cli
