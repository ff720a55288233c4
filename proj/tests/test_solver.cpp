#include <doctest.h>

#include "graphs.hpp"
#include "msc/generate.hpp"
#include "msc/memo.hpp"
#include "msc/oracle.hpp"
#include "msc/solver.hpp"

using namespace msc;

namespace {

/// Two disjoint copies of `g` as one set cover instance.
SetCoverInstance doubled(const Graph& g) {
  Graph two{2 * g.n, g.edges};
  for (auto [a, b] : g.edges) two.edges.emplace_back(a + g.n, b + g.n);
  two.normalize();
  return from_graph(two);
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("dominating sets of small graphs") {
    CHECK(msc::msc(from_graph(testing::cycle(4))).cover.size() == 2);
    CHECK(msc::msc(from_graph(testing::path(7))).cover.size() == 3);
    CHECK(solve_dominating_set(testing::cycle(9)).nodes.size() == 3);
    CHECK(solve_dominating_set(testing::star(5)).nodes == std::vector<Node>{0});
    const auto grid = testing::grid(5, 5);
    const auto ds = solve_dominating_set(grid);
    CHECK(ds.nodes.size() == 7);
    CHECK(is_dominating_set(grid, ds.nodes));
    CHECK(oracle::min_dominating_set_size(grid) == 7);
  }

  TEST_CASE("empty instance") {
    const auto r = msc::msc(SetCoverInstance{});
    CHECK(r.cover.size() == 0);
    CHECK(msc_memo(SetCoverInstance{}).cover.size() == 0);
  }

  TEST_CASE("stats") {
    const auto r = msc::msc(from_graph(testing::cycle(12)));
    CHECK(r.stats.nodes_expanded >= 1);
    CHECK(r.stats.memo_hits == 0);
    CHECK(r.stats.wall_time.count() >= 0);
  }

  TEST_CASE("optimal on random set cover instances") {
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
      const auto inst = random_setcover(rng.between(2, 22), 0.1 + 0.5 * rng.unit(), rng);
      const auto r = msc::msc(inst);
      CHECK(is_cover(inst, r.cover.chosen));
      CHECK(r.cover.size() == oracle::min_set_cover_size(inst));
      if (r.stats.branchings > 0) CHECK(r.stats.min_branch_size >= 3);
    }
  }

  TEST_CASE("optimal dominating sets on random graphs") {
    Rng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
      const auto g = random_graph(rng.between(1, 10), 0.1 + 0.6 * rng.unit(), rng);
      const auto r = solve_dominating_set(g);
      CHECK(is_dominating_set(g, r.nodes));
      CHECK(r.nodes.size() == oracle::min_dominating_set_size(g));
    }
  }

  TEST_CASE("from_graph agrees with brute force on every graph with up to 5 nodes") {
    for (std::size_t n = 1; n <= 5; ++n) {
      std::vector<std::pair<Node, Node>> all;
      for (Node a = 0; a < n; ++a)
        for (Node b = a + 1; b < n; ++b) all.emplace_back(a, b);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
        Graph g{n, {}};
        for (std::size_t i = 0; i < all.size(); ++i)
          if (mask >> i & 1) g.edges.push_back(all[i]);
        CHECK(msc::msc(from_graph(g)).cover.size() == oracle::min_dominating_set_size(g));
      }
    }
  }

  TEST_CASE("branch order and memoisation do not change the optimum") {
    Rng rng(10);
    for (int trial = 0; trial < 200; ++trial) {
      const auto inst = random_setcover(rng.between(2, 24), 0.1 + 0.4 * rng.unit(), rng);
      const auto plain = msc::msc(inst);
      SolverOptions flipped;
      flipped.include_first = true;
      const auto other = msc::msc(inst, flipped);
      const auto memo = msc_memo(inst);
      CHECK(other.cover.size() == plain.cover.size());
      CHECK(memo.cover.size() == plain.cover.size());
      CHECK(is_cover(inst, memo.cover.chosen));
    }
  }

  TEST_CASE("deterministic") {
    Rng rng(12);
    const auto inst = from_graph(random_graph(24, 0.2, rng));
    const auto a = msc::msc(inst);
    const auto b = msc::msc(inst);
    CHECK(a.cover.chosen == b.cover.chosen);
    CHECK(a.stats.nodes_expanded == b.stats.nodes_expanded);
    CHECK(a.stats.max_depth == b.stats.max_depth);
    CHECK(a.stats.branchings == b.stats.branchings);
  }

  TEST_CASE("memo hits on duplicated substructure") {
    const auto inst = doubled(testing::petersen());
    SolverOptions options;
    options.split_components = false;
    const auto plain = msc::msc(inst, options);
    const auto memo = msc_memo(inst, options);
    CHECK(plain.cover.size() == 6);
    CHECK(memo.cover.size() == 6);
    CHECK(is_cover(inst, memo.cover.chosen));
    CHECK(memo.stats.memo_hits >= 1);
    CHECK(memo.stats.nodes_expanded < plain.stats.nodes_expanded);
  }

  TEST_CASE("resource limits") {
    const auto inst = from_graph(testing::grid(5, 5));
    SolverOptions limited;
    limited.node_limit = 3;
    CHECK_THROWS_AS(msc::msc(inst, limited), ResourceError);
    try {
      msc::msc(inst, limited);
    } catch (const ResourceError& e) {
      CHECK(e.stats().nodes_expanded >= 3);
    }
    SolverOptions tiny;
    tiny.memo_budget_bytes = 64;
    CHECK_THROWS_AS(msc_memo(inst, tiny), ResourceError);
  }

  TEST_CASE("canonical form") {
    // Same structure, different ids and order.
    const auto a = SetCoverInstance::from_lists({{1, 2, 3}, {3, 4}, {4, 1}});
    const SetCoverInstance b({SetRecord{7, {10, 20, 30}}, SetRecord{9, {30, 40}}, SetRecord{12, {40, 10}}});
    CHECK(canonicalize(a).key == canonicalize(b).key);
    CHECK(canonicalize(b).order.size() == 3);
    const auto c = SetCoverInstance::from_lists({{1, 2, 3}, {3, 4}, {4, 2}});
    CHECK(canonicalize(a).key != canonicalize(c).key);

    MemoStore store(1 << 20);
    CHECK_FALSE(store.lookup(canonicalize(a).key).has_value());
    CHECK(store.store(canonicalize(a).key, {0, 2}));
    CHECK(store.lookup(canonicalize(b).key) == std::vector<std::uint32_t>{0, 2});
    CHECK(store.entries() == 1);
    MemoStore full(8);
    CHECK_FALSE(full.store(canonicalize(a).key, {0}));
    CHECK(full.entries() == 0);
  }
}
