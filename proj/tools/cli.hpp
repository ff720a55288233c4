#pragma once

#include <iosfwd>

namespace msc::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;  // verify found a disagreement
inline constexpr int kUsage = 2;     // bad arguments, unreadable or malformed input
inline constexpr int kResource = 3;  // node limit or memo budget exhausted
inline constexpr int kInternal = 4;

/// Entry point of the `msc` tool, writing to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace msc::cli
