#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omega::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kUsage = 2;
inline constexpr int kMath = 3;
inline constexpr int kPrecision = 4;

/// Runs one command line (without the program name). Reads OMEGA_DEPTH from
/// the environment; an explicit --depth wins.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omega::cli
