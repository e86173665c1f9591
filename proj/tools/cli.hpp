#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace c2iga::cli {

enum ExitCode { kOk = 0, kValidation = 1, kIndeterminate = 2 };

/// Runs one command line (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace c2iga::cli
