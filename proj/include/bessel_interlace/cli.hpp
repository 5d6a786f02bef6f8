#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bessel {

/// Runs the command-line tool in process. `args` excludes the program name.
/// Returns 0 when every check passes, 1 on a mathematical violation or a
/// missing witness, 2 on a usage or domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bessel
