#pragma once

#include <string>
#include <string_view>

#include "msc/instance.hpp"

namespace msc {

/// One set per line, whitespace-separated non-negative integers. Lines whose
/// first non-blank character is `#` are comments. Blank lines are errors.
SetCoverInstance parse_setcover(std::string_view text);

/// DIMACS edge format: `p edge <n> <m>`, `e <u> <v>` with 1-based ids, `c` comments.
Graph parse_graph(std::string_view text);

std::string format_setcover(const SetCoverInstance& inst);
std::string format_graph(const Graph& g);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace msc
