#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgr::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kInfeasible = 2,
    kUsageError = 3,
    kTooLarge = 4,
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lgr::cli
