#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gencat::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;    // bad flags, malformed rationals or parameter lists
inline constexpr int kDomain = 3;   // arguments outside an operation's domain
inline constexpr int kNumeric = 4;  // tolerance not reached, or two routes disagree
inline constexpr int kNetwork = 5;  // OEIS fetch failed or offline cache miss

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gencat::cli
