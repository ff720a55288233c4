#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "msc/instance.hpp"

namespace msc {

/// Structural key of an instance: elements renumbered densely by first
/// occurrence (scanning sets in id order), then sets sorted by
/// (size, element list). `order[i]` is the id of the set at canonical position i.
struct CanonicalForm {
  std::vector<std::uint32_t> key;  // size-prefixed set lists, flattened
  std::vector<SetId> order;
};

CanonicalForm canonicalize(const SetCoverInstance& inst);

/// Canonical key -> optimal cover, stored as canonical set positions.
/// Confined to one solver run.
class MemoStore {
 public:
  explicit MemoStore(std::size_t budget_bytes) : budget_bytes_(budget_bytes) {}

  std::optional<std::vector<std::uint32_t>> lookup(const std::vector<std::uint32_t>& key) const;

  /// Inserts unless the key is present. Returns false, storing nothing,
  /// when the entry would push usage past the budget.
  bool store(const std::vector<std::uint32_t>& key, std::vector<std::uint32_t> positions);

  std::size_t bytes_used() const { return bytes_used_; }
  std::size_t entries() const { return table_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept;
  };

  std::size_t budget_bytes_;
  std::size_t bytes_used_ = 0;
  std::unordered_map<std::vector<std::uint32_t>, std::vector<std::uint32_t>, KeyHash> table_;
};

}  // namespace msc
