#include "msc/matching.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>

#include "msc/errors.hpp"

namespace msc {

MatchingProblem build_matching_problem(const SetCoverInstance& inst) {
  MatchingProblem problem;
  problem.nodes = inst.universe();
  std::set<std::pair<Element, Element>> seen;
  for (const auto& s : inst.sets()) {
    if (s.size() > 2) {
      throw ContractError("set " + std::to_string(s.id) + " has more than two elements");
    }
    for (Element e : s.elements) problem.pendant_sets.try_emplace(e, s.id);
    if (s.size() == 2 && seen.emplace(s.elements[0], s.elements[1]).second) {
      problem.edges.push_back({s.elements[0], s.elements[1], s.id});
    }
  }
  return problem;
}

namespace {

class Blossom {
 public:
  Blossom(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges)
      : n_(n), adj_(n), mate_(n, -1), parent_(n), base_(n), used_(n), in_blossom_(n) {
    for (auto [a, b] : edges) {
      if (a == b) continue;
      adj_[a].push_back(static_cast<int>(b));
      adj_[b].push_back(static_cast<int>(a));
    }
  }

  std::vector<int> run() {
    // Greedy start; augmenting phases fix the rest.
    for (std::size_t v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (int u : adj_[v]) {
        if (mate_[u] == -1) {
          mate_[u] = static_cast<int>(v);
          mate_[v] = u;
          break;
        }
      }
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      int end = find_path(static_cast<int>(v));
      while (end != -1) {
        int pv = parent_[end];
        int next = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = next;
      }
    }
    return mate_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<int>(i);
    used_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          // Odd cycle: contract the blossom onto its base.
          int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(static_cast<int>(i));
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  std::size_t n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

}  // namespace

std::vector<int> maximum_matching(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw ContractError("matching edge endpoint out of range");
  }
  return Blossom(n, edges).run();
}

std::vector<std::size_t> max_matching(const MatchingProblem& problem) {
  std::unordered_map<Element, std::size_t> index;
  for (std::size_t i = 0; i < problem.nodes.size(); ++i) index.emplace(problem.nodes[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(problem.edges.size());
  for (const auto& e : problem.edges) edges.emplace_back(index.at(e.a), index.at(e.b));
  auto mate = maximum_matching(problem.nodes.size(), edges);
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if (mate[a] == static_cast<int>(b)) {
      chosen.push_back(i);
      mate[a] = mate[b] = -1;  // parallel edges are deduplicated, but stay safe
    }
  }
  return chosen;
}

CoverSolution solve_small_sets(const SetCoverInstance& inst) {
  MatchingProblem problem = build_matching_problem(inst);
  std::set<Element> uncovered(problem.nodes.begin(), problem.nodes.end());
  CoverSolution solution;
  for (std::size_t i : max_matching(problem)) {
    const auto& edge = problem.edges[i];
    solution.chosen.push_back(edge.set);
    uncovered.erase(edge.a);
    uncovered.erase(edge.b);
  }
  // Pair up leftover elements through a shared size-2 set first.
  for (const auto& edge : problem.edges) {
    if (uncovered.count(edge.a) && uncovered.count(edge.b)) {
      solution.chosen.push_back(edge.set);
      uncovered.erase(edge.a);
      uncovered.erase(edge.b);
    }
  }
  for (Element e : uncovered) solution.chosen.push_back(problem.pendant_sets.at(e));
  std::sort(solution.chosen.begin(), solution.chosen.end());
  solution.chosen.erase(std::unique(solution.chosen.begin(), solution.chosen.end()), solution.chosen.end());
  return solution;
}

}  // namespace msc
