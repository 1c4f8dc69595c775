#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdslab {

/// Runs one command line (args exclude the program name). Exit codes:
/// 0 ok, 2 parse or validation error, 3 precondition violated, 4 internal.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mdslab
