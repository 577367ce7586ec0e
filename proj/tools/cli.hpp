#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fdist::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_input = 1,
    exit_budget = 2,
    exit_claim = 3,
};

/// Runs one `fdist` invocation; `args` excludes the program name.
/// The run report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdist::cli
