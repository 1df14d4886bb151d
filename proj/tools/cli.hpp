#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permlab::cli {

// Exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;      // check failed or search exhausted
inline constexpr int kInconclusive = 2;  // node budget hit
inline constexpr int kUsage = 3;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permlab::cli
