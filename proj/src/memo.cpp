#include "msc/memo.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace msc {

CanonicalForm canonicalize(const SetCoverInstance& inst) {
  const auto& sets = inst.sets();
  std::unordered_map<Element, std::uint32_t> relabel;
  std::vector<std::vector<std::uint32_t>> lists(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (Element e : sets[i].elements) {
      auto [it, fresh] = relabel.try_emplace(e, static_cast<std::uint32_t>(relabel.size()));
      lists[i].push_back(it->second);
    }
    std::sort(lists[i].begin(), lists[i].end());
  }
  std::vector<std::size_t> perm(sets.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (lists[a].size() != lists[b].size()) return lists[a].size() < lists[b].size();
    return lists[a] < lists[b];
  });
  CanonicalForm form;
  form.order.reserve(sets.size());
  for (std::size_t i : perm) {
    form.key.push_back(static_cast<std::uint32_t>(lists[i].size()));
    form.key.insert(form.key.end(), lists[i].begin(), lists[i].end());
    form.order.push_back(sets[i].id);
  }
  return form;
}

std::size_t MemoStore::KeyHash::operator()(const std::vector<std::uint32_t>& key) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t x : key) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<std::vector<std::uint32_t>> MemoStore::lookup(const std::vector<std::uint32_t>& key) const {
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

bool MemoStore::store(const std::vector<std::uint32_t>& key, std::vector<std::uint32_t> positions) {
  if (table_.count(key)) return true;
  // Rough footprint: payloads plus node and bucket overhead.
  std::size_t cost = (key.size() + positions.size()) * sizeof(std::uint32_t) + 96;
  if (bytes_used_ + cost > budget_bytes_) return false;
  bytes_used_ += cost;
  table_.emplace(key, std::move(positions));
  return true;
}

}  // namespace msc
