#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pso::cli {

/// Runs the command-line tool on the given arguments (program name excluded)
/// and returns the process exit code: 0 found/pass, 1 infeasible/fail,
/// 2 usage or input error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace pso::cli
