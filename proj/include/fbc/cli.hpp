#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fbc {

// Runs one CLI invocation. `args` excludes the program name.
// Exit codes: 0 decided/computed, 2 unknown within budget, 1 usage or
// input error.
int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace fbc
