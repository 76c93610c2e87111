#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace implicitize::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_spec = 2,
    exit_io = 3,
    exit_fit = 4,
};

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` unless --report is given; failures print one JSON object
/// {"error": {"code", "kind", "message"}} to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace implicitize::cli
