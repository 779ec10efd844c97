#pragma once

#include <iosfwd>

namespace pedalis {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitGeometry = 2,
    kExitEmpty = 3,
    kExitVerifyFailed = 4,
};

/// Runs `pedalis <map|implicit|sample|verify> ...`. Results go to `out`,
/// diagnostics and timings to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pedalis
