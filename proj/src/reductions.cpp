#include "msc/reductions.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "msc/errors.hpp"

namespace msc {

namespace {

/// Element -> positions (into inst.sets()) of the sets containing it, ascending.
std::map<Element, std::vector<std::size_t>> occurrences(const SetCoverInstance& inst) {
  std::map<Element, std::vector<std::size_t>> occ;
  const auto& sets = inst.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (Element e : sets[i].elements) occ[e].push_back(i);
  }
  return occ;
}

}  // namespace

const char* to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::none: return "none";
    case ReductionKind::split: return "split";
    case ReductionKind::removed_set: return "removed_set";
    case ReductionKind::removed_element: return "removed_element";
    case ReductionKind::forced_set: return "forced_set";
  }
  return "?";
}

SetCoverInstance without_set(const SetCoverInstance& inst, SetId id) {
  std::vector<SetRecord> sets;
  sets.reserve(inst.set_count());
  for (const auto& s : inst.sets()) {
    if (s.id != id) sets.push_back(s);
  }
  return SetCoverInstance(std::move(sets));
}

SetCoverInstance without_element(const SetCoverInstance& inst, Element e) {
  std::vector<SetRecord> sets;
  sets.reserve(inst.set_count());
  for (const auto& s : inst.sets()) {
    SetRecord copy = s;
    auto it = std::lower_bound(copy.elements.begin(), copy.elements.end(), e);
    if (it != copy.elements.end() && *it == e) copy.elements.erase(it);
    if (!copy.elements.empty()) sets.push_back(std::move(copy));
  }
  return SetCoverInstance(std::move(sets));
}

SetCoverInstance take_set(const SetCoverInstance& inst, SetId id) {
  const SetRecord* chosen = inst.find(id);
  if (chosen == nullptr) throw QueryError("unknown set id " + std::to_string(id));
  const std::vector<Element>& gone = chosen->elements;
  std::vector<SetRecord> sets;
  sets.reserve(inst.set_count());
  for (const auto& s : inst.sets()) {
    if (s.id == id) continue;
    SetRecord rest{s.id, {}};
    std::set_difference(s.elements.begin(), s.elements.end(), gone.begin(), gone.end(),
                        std::back_inserter(rest.elements));
    if (!rest.elements.empty()) sets.push_back(std::move(rest));
  }
  return SetCoverInstance(std::move(sets));
}

std::optional<SetId> find_subset_set(const SetCoverInstance& inst) {
  const auto& sets = inst.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j || sets[i].size() > sets[j].size()) continue;
      if (std::includes(sets[j].elements.begin(), sets[j].elements.end(),
                        sets[i].elements.begin(), sets[i].elements.end())) {
        return sets[i].id;
      }
    }
  }
  return std::nullopt;
}

std::optional<Element> find_subsumed_element(const SetCoverInstance& inst) {
  auto occ = occurrences(inst);
  // Candidate e is removed when some other e' has S(e') a subset of S(e); on equal
  // occurrence lists only the larger id is removed.
  for (const auto& [e, sets_e] : occ) {
    for (const auto& [other, sets_other] : occ) {
      if (other == e || sets_other.size() > sets_e.size()) continue;
      if (sets_other.size() == sets_e.size() && other > e) continue;
      if (std::includes(sets_e.begin(), sets_e.end(), sets_other.begin(), sets_other.end())) {
        return e;
      }
    }
  }
  return std::nullopt;
}

std::optional<SetId> find_singleton_set(const SetCoverInstance& inst) {
  for (const auto& s : inst.sets()) {
    if (s.size() == 1) return s.id;
  }
  return std::nullopt;
}

std::optional<SetId> find_freq2_forced_set(const SetCoverInstance& inst) {
  auto occ = occurrences(inst);
  const auto& sets = inst.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const SetRecord& s = sets[i];
    std::size_t r2 = 0;
    std::unordered_set<Element> outside;
    for (Element e : s.elements) {
      const auto& where = occ.at(e);
      if (where.size() != 2) continue;
      ++r2;
      const SetRecord& partner = sets[where[0] == i ? where[1] : where[0]];
      for (Element x : partner.elements) {
        if (!s.contains(x)) outside.insert(x);
      }
    }
    if (outside.size() < r2) return s.id;
  }
  return std::nullopt;
}

ReductionOutcome rule_split(const SetCoverInstance& inst) {
  ReductionOutcome out;
  auto comps = components(inst);
  if (comps.size() < 2) return out;
  out.kind = ReductionKind::split;
  for (const auto& ids : comps) out.parts.push_back(restrict_to(inst, ids));
  return out;
}

ReductionOutcome rule_subset(const SetCoverInstance& inst) {
  ReductionOutcome out;
  if (auto id = find_subset_set(inst)) {
    out.kind = ReductionKind::removed_set;
    out.set = *id;
    out.residual = without_set(inst, *id);
  }
  return out;
}

ReductionOutcome rule_subsumption(const SetCoverInstance& inst) {
  ReductionOutcome out;
  if (auto e = find_subsumed_element(inst)) {
    out.kind = ReductionKind::removed_element;
    out.element = *e;
    out.residual = without_element(inst, *e);
  }
  return out;
}

ReductionOutcome rule_singleton(const SetCoverInstance& inst) {
  ReductionOutcome out;
  if (auto id = find_singleton_set(inst)) {
    out.kind = ReductionKind::forced_set;
    out.set = *id;
    out.residual = take_set(inst, *id);
  }
  return out;
}

ReductionOutcome rule_freq2_counting(const SetCoverInstance& inst) {
  ReductionOutcome out;
  if (auto id = find_freq2_forced_set(inst)) {
    out.kind = ReductionKind::forced_set;
    out.set = *id;
    out.residual = take_set(inst, *id);
  }
  return out;
}

std::vector<SetId> CascadeResult::forced() const {
  std::vector<SetId> ids;
  for (const auto& step : log) {
    if (step.kind == ReductionKind::forced_set) ids.push_back(step.set);
  }
  return ids;
}

std::vector<SetId> CascadeResult::reconstruct(const std::vector<std::vector<SetId>>& part_covers) const {
  if (part_covers.size() != parts.size()) throw ContractError("one cover per cascade part required");
  std::vector<SetId> cover = forced();
  for (const auto& c : part_covers) cover.insert(cover.end(), c.begin(), c.end());
  std::sort(cover.begin(), cover.end());
  return cover;
}

CascadeResult cascade(const SetCoverInstance& inst) {
  CascadeResult result;
  std::vector<SetCoverInstance> work;
  if (!inst.empty()) work.push_back(inst);
  while (!work.empty()) {
    SetCoverInstance cur = std::move(work.back());
    work.pop_back();
    if (auto split = rule_split(cur); split.applied()) {
      result.log.push_back({ReductionKind::split, 0, 0});
      // Reverse so parts come off the stack in component order.
      for (auto it = split.parts.rbegin(); it != split.parts.rend(); ++it) work.push_back(std::move(*it));
      continue;
    }
    ReductionOutcome step = rule_subset(cur);
    if (!step.applied()) step = rule_subsumption(cur);
    if (!step.applied()) step = rule_singleton(cur);
    if (!step.applied()) step = rule_freq2_counting(cur);
    if (!step.applied()) {
      result.parts.push_back(std::move(cur));
      continue;
    }
    result.log.push_back({step.kind, step.set, step.element});
    if (!step.residual.empty()) work.push_back(std::move(step.residual));
  }
  return result;
}

}  // namespace msc
