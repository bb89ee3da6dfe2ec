#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gemkit {

/// Runs one command-line invocation. `args` excludes the program name.
/// Returns 0 when every requested certificate passes, 1 when one fails (the
/// report is still written) and 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gemkit
