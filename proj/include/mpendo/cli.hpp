#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mpendo {

/// Runs the command line `args` (without the program name). Reports go to `out`
/// (or the --out file), diagnostics to `err`.
/// Returns 0 when nothing failed, 1 when some report is FAIL, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mpendo
