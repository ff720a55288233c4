#include "msc/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>

#include "msc/errors.hpp"

namespace msc::oracle {

namespace {

/// Indices of a smallest selection of masks whose OR is `full`.
std::vector<std::size_t> min_cover(const std::vector<std::uint64_t>& masks, std::uint64_t full) {
  const std::size_t m = masks.size();
  if (full == 0) return {};
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t, std::size_t, std::uint64_t)> extend =
      [&](std::size_t start, std::size_t left, std::uint64_t acc) -> bool {
    if (left == 0) return acc == full;
    for (std::size_t i = start; i + left <= m; ++i) {
      pick.push_back(i);
      if (extend(i + 1, left - 1, acc | masks[i])) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t k = 1; k <= m; ++k) {
    if (extend(0, k, 0)) return pick;
  }
  throw ContractError("instance has no cover");
}

std::vector<std::size_t> cover_positions(const SetCoverInstance& inst) {
  std::unordered_map<Element, int> bit;
  for (Element e : inst.universe()) bit.emplace(e, static_cast<int>(bit.size()));
  if (bit.size() > 64) throw ContractError("oracle supports at most 64 elements");
  std::vector<std::uint64_t> masks;
  for (const auto& s : inst.sets()) {
    std::uint64_t m = 0;
    for (Element e : s.elements) m |= std::uint64_t{1} << bit.at(e);
    masks.push_back(m);
  }
  std::uint64_t full = bit.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bit.size()) - 1;
  return min_cover(masks, full);
}

}  // namespace

std::size_t min_set_cover_size(const SetCoverInstance& inst) { return cover_positions(inst).size(); }

std::vector<SetId> min_set_cover(const SetCoverInstance& inst) {
  std::vector<SetId> ids;
  for (std::size_t i : cover_positions(inst)) ids.push_back(inst.sets()[i].id);
  return ids;
}

std::size_t min_dominating_set_size(const Graph& g) {
  if (g.n > 64) throw ContractError("oracle supports at most 64 nodes");
  std::vector<std::uint64_t> closed(g.n);
  for (std::size_t v = 0; v < g.n; ++v) closed[v] = std::uint64_t{1} << v;
  for (auto [a, b] : g.edges) {
    closed[a] |= std::uint64_t{1} << b;
    closed[b] |= std::uint64_t{1} << a;
  }
  std::uint64_t full = g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
  return min_cover(closed, full).size();
}

std::size_t max_matching_size(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (n > 24) throw ContractError("oracle supports at most 24 nodes");
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [a, b] : edges) {
    if (a == b) continue;
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  std::vector<int> best(std::size_t{1} << n, -1);
  std::function<int(std::uint32_t)> solve = [&](std::uint32_t mask) -> int {
    if (mask == 0) return 0;
    if (best[mask] >= 0) return best[mask];
    int v = __builtin_ctz(mask);
    std::uint32_t rest = mask & ~(1u << v);
    int result = solve(rest);
    for (std::uint32_t cand = adj[v] & rest; cand; cand &= cand - 1) {
      int u = __builtin_ctz(cand);
      result = std::max(result, 1 + solve(rest & ~(1u << u)));
    }
    return best[mask] = result;
  };
  return static_cast<std::size_t>(solve(n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1)));
}

}  // namespace msc::oracle
