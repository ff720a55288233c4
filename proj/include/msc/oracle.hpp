#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "msc/instance.hpp"

// Exhaustive reference solvers. They share no code with the search and are
// meant for small inputs only.
namespace msc::oracle {

/// Minimum cover size by enumerating subsets in order of size.
/// Requires at most 64 distinct elements.
std::size_t min_set_cover_size(const SetCoverInstance& inst);

/// Ids of one minimum cover, same enumeration.
std::vector<SetId> min_set_cover(const SetCoverInstance& inst);

/// Minimum dominating set size by enumerating node subsets (n <= 64).
std::size_t min_dominating_set_size(const Graph& g);

/// Maximum matching size by dynamic programming over node subsets (n <= 24).
std::size_t max_matching_size(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace msc::oracle
