#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pqgroup::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // a negative mathematical answer or a failed hypothesis
inline constexpr int kUsage = 2;
inline constexpr int kInput = 3;  // unreadable or malformed group file

// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pqgroup::cli
