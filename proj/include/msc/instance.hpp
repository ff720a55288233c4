#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace msc {

using Element = std::uint32_t;
using SetId = std::uint32_t;
using Node = std::uint32_t;

class WeightVector;

/// One set of the instance. `id` survives element deletion and is never
/// reused, so a cover of a reduced instance names sets of the original one.
struct SetRecord {
  SetId id = 0;
  std::vector<Element> elements;  // sorted, unique

  std::size_t size() const { return elements.size(); }
  bool contains(Element e) const;
  friend bool operator==(const SetRecord&, const SetRecord&) = default;
};

/// A collection of non-empty sets. Sets are kept in ascending id order.
class SetCoverInstance {
 public:
  SetCoverInstance() = default;

  /// Throws ContractError on an empty set or a duplicate id.
  explicit SetCoverInstance(std::vector<SetRecord> sets);

  /// Sets get ids 0, 1, 2, ... in list order.
  static SetCoverInstance from_lists(const std::vector<std::vector<Element>>& lists);

  const std::vector<SetRecord>& sets() const { return sets_; }
  std::size_t set_count() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }

  /// Sorted list of all elements occurring in some set.
  std::vector<Element> universe() const;
  std::size_t universe_size() const { return universe().size(); }

  /// |sets| + |universe|, recomputed on every call.
  std::size_t dimension() const;
  std::size_t max_set_size() const;

  /// Number of sets containing `e`; throws QueryError when `e` is not in the universe.
  std::size_t frequency(Element e) const;

  /// Null when no set has this id.
  const SetRecord* find(SetId id) const;

  friend bool operator==(const SetCoverInstance&, const SetCoverInstance&) = default;

 private:
  std::vector<SetRecord> sets_;
};

/// Undirected graph on nodes 0..n-1.
struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<Node, Node>> edges;

  /// Sorts endpoints, drops duplicates. Throws ContractError on out-of-range endpoints.
  void normalize();
  std::vector<std::vector<Node>> adjacency() const;
};

/// Ids of the chosen sets, in the id space of the original instance.
struct CoverSolution {
  std::vector<SetId> chosen;

  std::size_t size() const { return chosen.size(); }
};

/// True when the sets named by `chosen` exist in `inst` and cover its universe.
bool is_cover(const SetCoverInstance& inst, const std::vector<SetId>& chosen);

/// One set N[v] per node v, with set id v.
SetCoverInstance from_graph(const Graph& g);

/// Connected components as lists of set ids. Components are ordered by
/// their smallest set id; ids inside a component ascend.
std::vector<std::vector<SetId>> components(const SetCoverInstance& inst);

/// Sub-instance holding only the sets with the listed ids.
SetCoverInstance restrict_to(const SetCoverInstance& inst, const std::vector<SetId>& ids);

/// Sum of w_{|S|} over sets plus v_{f(e)} over elements.
double measure(const SetCoverInstance& inst, const WeightVector& weights);

}  // namespace msc
