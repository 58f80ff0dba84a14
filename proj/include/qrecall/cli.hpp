#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrecall {

// Full command-line front end, in-process. `args` excludes the program name.
// Diagnostics go to `err`, data to `out` (or to files named by flags).
// Exit codes: 0 success, 1 usage/config error, 2 numerical failure, 3 I/O failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qrecall
