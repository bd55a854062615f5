#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prelie {

/// Runs the command-line interface on the given arguments (without the
/// program name). Exit codes: 0 all requested checks passed, 1 a check
/// failed, 2 input or resource error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace prelie
