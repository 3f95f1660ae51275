#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubmon::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalidInput = 2, kInconclusive = 3 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubmon::cli
