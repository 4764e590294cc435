#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tff::cli {

enum exit_code : int { success = 0, negative = 1, usage = 2, internal = 3 };

/// Runs one invocation of the `tff` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tff::cli
