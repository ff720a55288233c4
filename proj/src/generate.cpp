#include "msc/generate.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "msc/errors.hpp"

namespace msc {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ContractError("empty range");
  // Rejection sampling keeps draws unbiased.
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % bound + 1) % bound;
  std::uint64_t x = engine_();
  while (x > limit) x = engine_();
  return x % bound;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Graph random_graph(std::size_t n, double p, Rng& rng) {
  Graph g;
  g.n = n;
  for (Node a = 0; a < n; ++a) {
    for (Node b = a + 1; b < n; ++b) {
      if (rng.chance(p)) g.edges.emplace_back(a, b);
    }
  }
  return g;
}

Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  Graph g = random_graph(n, p, rng);
  for (Node v = 1; v < n; ++v) {
    g.edges.emplace_back(static_cast<Node>(rng.below(v)), v);
  }
  g.normalize();
  return g;
}

SetCoverInstance random_setcover(std::size_t dimension, double density, Rng& rng) {
  if (dimension < 2) throw ContractError("dimension must be at least 2");
  const std::size_t elements = rng.between(1, dimension - 1);
  const std::size_t set_count = dimension - elements;
  std::vector<std::vector<Element>> lists(set_count);
  for (Element e = 0; e < elements; ++e) {
    bool placed = false;
    for (auto& list : lists) {
      if (rng.chance(density)) {
        list.push_back(e);
        placed = true;
      }
    }
    if (!placed) lists[rng.below(set_count)].push_back(e);
  }
  for (auto& list : lists) {
    if (list.empty()) list.push_back(static_cast<Element>(rng.below(elements)));
  }
  return SetCoverInstance::from_lists(lists);
}

SetCoverInstance random_small_sets(std::size_t dimension, Rng& rng) {
  if (dimension < 2) throw ContractError("dimension must be at least 2");
  const std::size_t elements = rng.between(1, std::max<std::size_t>(1, dimension * 2 / 3));
  const std::size_t set_count = dimension - elements;
  std::vector<std::vector<Element>> lists;
  std::set<Element> covered;
  for (std::size_t i = 0; i < set_count; ++i) {
    Element a = static_cast<Element>(rng.below(elements));
    Element b = static_cast<Element>(rng.below(elements));
    if (rng.chance(0.2) || a == b) {
      lists.push_back({a});
    } else {
      lists.push_back({a, b});
      covered.insert(b);
    }
    covered.insert(a);
  }
  // Elements no set picked become singleton sets, which shifts the dimension;
  // relabel instead so the universe is exactly the covered elements.
  std::vector<Element> relabel(elements, 0);
  Element next = 0;
  for (Element e : covered) relabel[e] = next++;
  for (auto& list : lists) {
    for (auto& e : list) e = relabel[e];
  }
  return SetCoverInstance::from_lists(lists);
}

}  // namespace msc
