#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace laurentsys::cli {

/// Runs one invocation; `args` excludes the program name. Returns the exit
/// code: 0 success / member, 1 non-member or failed selftest, 2 usage,
/// parse, validation or I/O errors. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace laurentsys::cli
