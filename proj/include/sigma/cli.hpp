#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sigma::cli {

/// Runs the command-line front end on already-split arguments (no program
/// name). Output goes to `out`, diagnostics and error messages to `err`.
/// Returns the process exit code:
///   0 success, 1 parse error, 2 domain error, 3 size limit,
///   4 conjecture mismatch, 5 unsolvable equation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sigma::cli
