#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pdgaps::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kNotAFactor = 3,
    kBudget = 4,
    kDivergences = 5,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdgaps::cli
