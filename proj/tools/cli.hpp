#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arbor::cli {

enum ExitCode : int { ok = 0, internal = 1, input = 2, precondition = 3, resource = 4 };

/// Runs the command line `args` (without the program name). Documents go to
/// `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arbor::cli
