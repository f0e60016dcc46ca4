#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adjhopf::cli {

// Runs one command (args exclude the program name).  Exit codes: 0 success,
// 1 domain error (machine-readable error JSON on stdout), 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace adjhopf::cli
