#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuntz::cli {

enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2 };

/// Runs one command line (without the program name). JSON goes to `out`
/// unless --pretty is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cuntz::cli
