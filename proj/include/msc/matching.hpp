#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "msc/instance.hpp"

namespace msc {

/// Element graph of an instance whose sets all have size <= 2.
struct MatchingProblem {
  struct Edge {
    Element a = 0;
    Element b = 0;
    SetId set = 0;
  };
  std::vector<Element> nodes;                 // the universe, ascending
  std::vector<Edge> edges;                    // one per distinct size-2 set, a < b
  std::map<Element, SetId> pendant_sets;      // element -> some set containing it
};

/// Throws ContractError if a set has more than two elements.
MatchingProblem build_matching_problem(const SetCoverInstance& inst);

/// Maximum-cardinality matching of a general graph (Edmonds' blossom
/// contraction). Returns mate[v], or -1 for unmatched nodes.
std::vector<int> maximum_matching(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);

/// Indices into `problem.edges` of a maximum matching.
std::vector<std::size_t> max_matching(const MatchingProblem& problem);

/// Optimal cover for an instance with all sets of size <= 2.
CoverSolution solve_small_sets(const SetCoverInstance& inst);

}  // namespace msc
