#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace epdl::cli {

/// Exit codes.
inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInputError = 3;
inline constexpr int kStarred = 4;
inline constexpr int kDisagree = 5;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace epdl::cli
