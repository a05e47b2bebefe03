#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hindlab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // not found, refuted, inconsistent
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hindlab::cli
