#include "msc/instance.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "msc/errors.hpp"
#include "msc/weights.hpp"

namespace msc {

bool SetRecord::contains(Element e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

SetCoverInstance::SetCoverInstance(std::vector<SetRecord> sets) : sets_(std::move(sets)) {
  for (auto& s : sets_) {
    if (s.elements.empty()) {
      throw ContractError("set " + std::to_string(s.id) + " is empty");
    }
    std::sort(s.elements.begin(), s.elements.end());
    s.elements.erase(std::unique(s.elements.begin(), s.elements.end()), s.elements.end());
  }
  std::sort(sets_.begin(), sets_.end(),
            [](const SetRecord& a, const SetRecord& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < sets_.size(); ++i) {
    if (sets_[i].id == sets_[i - 1].id) {
      throw ContractError("duplicate set id " + std::to_string(sets_[i].id));
    }
  }
}

SetCoverInstance SetCoverInstance::from_lists(const std::vector<std::vector<Element>>& lists) {
  std::vector<SetRecord> sets;
  sets.reserve(lists.size());
  for (std::size_t i = 0; i < lists.size(); ++i) {
    sets.push_back({static_cast<SetId>(i), lists[i]});
  }
  return SetCoverInstance(std::move(sets));
}

std::vector<Element> SetCoverInstance::universe() const {
  std::vector<Element> out;
  for (const auto& s : sets_) out.insert(out.end(), s.elements.begin(), s.elements.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t SetCoverInstance::dimension() const { return sets_.size() + universe().size(); }

std::size_t SetCoverInstance::max_set_size() const {
  std::size_t best = 0;
  for (const auto& s : sets_) best = std::max(best, s.size());
  return best;
}

std::size_t SetCoverInstance::frequency(Element e) const {
  std::size_t count = 0;
  for (const auto& s : sets_) count += s.contains(e) ? 1 : 0;
  if (count == 0) throw QueryError("element " + std::to_string(e) + " is not in the universe");
  return count;
}

const SetRecord* SetCoverInstance::find(SetId id) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), id,
                             [](const SetRecord& s, SetId x) { return s.id < x; });
  return (it != sets_.end() && it->id == id) ? &*it : nullptr;
}

void Graph::normalize() {
  for (auto& [a, b] : edges) {
    if (a >= n || b >= n) throw ContractError("edge endpoint out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::vector<std::vector<Node>> Graph::adjacency() const {
  std::vector<std::vector<Node>> adj(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw ContractError("edge endpoint out of range");
    if (a == b) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

bool is_cover(const SetCoverInstance& inst, const std::vector<SetId>& chosen) {
  std::vector<Element> covered;
  for (SetId id : chosen) {
    const SetRecord* s = inst.find(id);
    if (s == nullptr) return false;
    covered.insert(covered.end(), s->elements.begin(), s->elements.end());
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  return covered == inst.universe();
}

SetCoverInstance from_graph(const Graph& g) {
  if (g.n == 0) throw ContractError("graph has no nodes");
  auto adj = g.adjacency();
  std::vector<SetRecord> sets(g.n);
  for (Node v = 0; v < g.n; ++v) {
    sets[v].id = v;
    sets[v].elements = adj[v];
    sets[v].elements.push_back(v);
  }
  return SetCoverInstance(std::move(sets));
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::vector<SetId>> components(const SetCoverInstance& inst) {
  const auto& sets = inst.sets();
  DisjointSets dsu(sets.size());
  std::unordered_map<Element, std::size_t> first_owner;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (Element e : sets[i].elements) {
      auto [it, inserted] = first_owner.try_emplace(e, i);
      if (!inserted) dsu.unite(it->second, i);
    }
  }
  // Roots are the smallest index of their class, so scanning in order yields
  // components sorted by smallest id.
  std::vector<std::vector<SetId>> out;
  std::vector<std::size_t> slot(sets.size(), 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::size_t root = dsu.find(i);
    if (root == i) {
      slot[i] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(sets[i].id);
  }
  return out;
}

SetCoverInstance restrict_to(const SetCoverInstance& inst, const std::vector<SetId>& ids) {
  std::vector<SetRecord> sets;
  sets.reserve(ids.size());
  for (SetId id : ids) {
    const SetRecord* s = inst.find(id);
    if (s == nullptr) throw QueryError("unknown set id " + std::to_string(id));
    sets.push_back(*s);
  }
  return SetCoverInstance(std::move(sets));
}

double measure(const SetCoverInstance& inst, const WeightVector& weights) {
  double k = 0.0;
  std::unordered_map<Element, std::size_t> freq;
  for (const auto& s : inst.sets()) {
    k += weights.w(s.size());
    for (Element e : s.elements) ++freq[e];
  }
  for (const auto& [e, f] : freq) k += weights.v(f);
  return k;
}

}  // namespace msc
