#pragma once

#include <optional>
#include <vector>

#include "msc/instance.hpp"

namespace msc {

// Polynomial-time reduction rules, applied in fixed priority order:
// split, subset, subsumption, singleton, frequency-two counting.
// Set ids survive every rule, so the only reconstruction work is adding
// forced sets back and taking the union over split parts.

enum class ReductionKind { none, split, removed_set, removed_element, forced_set };

const char* to_string(ReductionKind kind);

struct ReductionOutcome {
  ReductionKind kind = ReductionKind::none;
  SetCoverInstance residual;           // unused for split and none
  std::vector<SetCoverInstance> parts; // split only
  SetId set = 0;                       // removed_set / forced_set
  Element element = 0;                 // removed_element

  bool applied() const { return kind != ReductionKind::none; }
};

ReductionOutcome rule_split(const SetCoverInstance& inst);
ReductionOutcome rule_subset(const SetCoverInstance& inst);
ReductionOutcome rule_subsumption(const SetCoverInstance& inst);
ReductionOutcome rule_singleton(const SetCoverInstance& inst);
ReductionOutcome rule_freq2_counting(const SetCoverInstance& inst);

/// Finders behind the rules; each scans in ascending id order and returns the first hit.
std::optional<SetId> find_subset_set(const SetCoverInstance& inst);
std::optional<Element> find_subsumed_element(const SetCoverInstance& inst);
std::optional<SetId> find_singleton_set(const SetCoverInstance& inst);
std::optional<SetId> find_freq2_forced_set(const SetCoverInstance& inst);

/// Instance without set `id`.
SetCoverInstance without_set(const SetCoverInstance& inst, SetId id);
/// Instance with `e` deleted from every set; sets that become empty are dropped.
SetCoverInstance without_element(const SetCoverInstance& inst, Element e);
/// Instance after taking set `id` into the cover: the set and all its
/// elements disappear, emptied sets are dropped.
SetCoverInstance take_set(const SetCoverInstance& inst, SetId id);

struct ReductionStep {
  ReductionKind kind = ReductionKind::none;
  SetId set = 0;
  Element element = 0;
};

/// Fully reduced connected parts plus the steps taken to reach them.
struct CascadeResult {
  std::vector<SetCoverInstance> parts;
  std::vector<ReductionStep> log;

  /// Sets the cascade committed to (forced_set steps).
  std::vector<SetId> forced() const;
  /// Optimal cover of the input, given optimal covers of each part (same order as `parts`).
  std::vector<SetId> reconstruct(const std::vector<std::vector<SetId>>& part_covers) const;
};

/// Applies rules until none fires on any part.
CascadeResult cascade(const SetCoverInstance& inst);

}  // namespace msc
