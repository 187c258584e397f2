#pragma once

#include <iosfwd>

namespace stechkin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;

// Entire command-line front end; main() only forwards to this.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stechkin::cli
