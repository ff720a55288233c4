#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "msc/instance.hpp"

namespace msc {

struct SolverOptions {
  bool memoize = false;
  /// Explore the include branch before the discard branch.
  bool include_first = false;
  /// Split into connected components. Only switched off in tests.
  bool split_components = true;
  /// 0 means unlimited.
  std::uint64_t node_limit = 0;
  std::size_t memo_budget_bytes = std::size_t{1} << 30;
};

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t max_depth = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t branchings = 0;
  /// Smallest |S| ever branched on; 0 when no branching happened.
  std::uint64_t min_branch_size = 0;
  std::chrono::nanoseconds wall_time{0};
};

/// Node limit or memo budget exhausted. Carries the statistics so far.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, SearchStats stats)
      : std::runtime_error(what), stats_(stats) {}
  const SearchStats& stats() const { return stats_; }

 private:
  SearchStats stats_;
};

struct SolveResult {
  CoverSolution cover;
  SearchStats stats;
};

/// Exact minimum set cover by branch and reduce.
SolveResult msc(const SetCoverInstance& inst, const SolverOptions& options = {});

/// Same search with every solved subproblem cached under its canonical form.
SolveResult msc_memo(const SetCoverInstance& inst, SolverOptions options = {});

struct DominatingSetResult {
  std::vector<Node> nodes;  // ascending
  SearchStats stats;
};

DominatingSetResult solve_dominating_set(const Graph& g, const SolverOptions& options = {});

bool is_dominating_set(const Graph& g, const std::vector<Node>& nodes);

}  // namespace msc
