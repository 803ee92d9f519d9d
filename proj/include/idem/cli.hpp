#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idem::cli {

enum exit_code : int {
  ok = 0,
  axioms_failed = 1,
  invalid_input = 2,
  diverged = 3,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace idem::cli
