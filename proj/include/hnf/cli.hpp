#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hnf {

/// Dispatches one invocation (argv without the program name) and writes the
/// report to out.  Returns the exit status: 0 success, 1 typed algebra
/// error, 2 usage or syntax error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hnf
