#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trop::cli {

/// Runs the tropgroups command line given argv-style arguments (without the
/// program name). Reports go to `out`, diagnostics to `err`. Returns the
/// process exit code: 0 success, 1 domain violation (well-formed input
/// outside an operation's domain), 2 malformed input or usage, 3 internal
/// invariant failure (a bug).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trop::cli
