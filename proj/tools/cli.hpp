#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qglf::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

/// Runs the qglf command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qglf::cli
