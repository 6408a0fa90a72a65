#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wfano {

/// Runs one CLI invocation.  args excludes the program name.
/// Exit codes: 0 success, 1 invalid input, 2 verification mismatch
/// (verify / diff commands only).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wfano
