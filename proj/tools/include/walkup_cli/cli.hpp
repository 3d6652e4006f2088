#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace walkup::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kUsage = 2 };

/// Runs one command line (without the program name). Input files named "-"
/// or omitted are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace walkup::cli
