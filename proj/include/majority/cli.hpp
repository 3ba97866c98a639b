#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace majority {

/// Runs the command line `args` (without the program name). Exit codes:
/// 0 success or valid, 1 invalid or infeasible, 2 usage or malformed
/// input, 3 failed precondition.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace majority
