#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace disc::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kIoError = 2 };

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace disc::cli
