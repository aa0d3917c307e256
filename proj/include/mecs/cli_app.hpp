#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mecs::cli {

/// Run the `mecs` command line with the given arguments (no program name).
/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

}  // namespace mecs::cli
