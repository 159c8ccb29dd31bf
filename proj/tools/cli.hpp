#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steklov::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

/// Runs the command line (without the program name) and returns the exit
/// code. Results go to `out` unless --out names a file; diagnostics go to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace steklov::cli
