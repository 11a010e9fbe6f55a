#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nilprob {

// Exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;  // verify: a must-hold check failed
inline constexpr int kExitError = 2;       // usage, definition, budget and other library errors

/// The nilprob command line. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilprob
