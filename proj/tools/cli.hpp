#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vdc::cli {

/// Exit codes: 0 success, 1 check failed, 2 invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidInput = 2;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vdc::cli
