#include "msc/analysis/stage.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "msc/errors.hpp"

namespace msc::analysis {

bool StageConfig::v_pinned(std::size_t i) const {
  return i == 0 || std::find(pinned_v.begin(), pinned_v.end(), i) != pinned_v.end();
}

bool StageConfig::w_pinned(std::size_t i) const {
  return i == 0 || std::find(pinned_w.begin(), pinned_w.end(), i) != pinned_w.end();
}

const std::vector<StageConfig>& stage_registry() {
  // The first three stages track frequencies up to the size cap; the later
  // ones stop one below it. The reference bounds correspond to these caps.
  static const std::vector<StageConfig> stages = {
      {"trivial", "Trivial algorithm", 1, 3, 3, true, {}, {}, OutFormula::trivial, 1.4519, 2.1080},
      {"stop-size-one", "Stop when all sets of size one", 2, 4, 4, true, {}, {}, OutFormula::stop_size_one,
       1.3380, 1.7902},
      {"include-freq-one", "Include all frequency one elements", 2, 5, 5, false, {1}, {},
       OutFormula::include_freq_one, 1.2978, 1.6842},
      {"subset-rule", "Subset rule", 2, 7, 6, false, {1}, {1}, OutFormula::subset_rule, 1.2665, 1.6038},
      {"matching-size-two", "Compute matching for size two sets (Fomin, Grandoni and Kratsch)", 3, 7, 6, false,
       {1}, {1}, OutFormula::matching_size_two, 1.2352, 1.5258},
      {"subsumption-rule", "Subsumption rule", 3, 7, 6, false, {1}, {1}, OutFormula::subsumption_rule, 1.2339,
       1.5223},
      {"avoid-unnecessary-branchings", "Avoid unnecessary branchings", 3, 8, 7, false, {1}, {1},
       OutFormula::avoid_branchings, 1.2313, 1.5160},
      {"connected-components-final", "Connected components (final)", 3, 8, 7, false, {1}, {1},
       OutFormula::connected_components, 1.2302, 1.5134},
  };
  return stages;
}

std::vector<std::string> stage_names() {
  std::vector<std::string> names;
  for (const auto& s : stage_registry()) names.push_back(s.name);
  return names;
}

const StageConfig& find_stage(std::string_view name) {
  for (const auto& s : stage_registry()) {
    if (s.name == name) return s;
  }
  std::string msg = "unknown stage '" + std::string(name) + "'; valid stages:";
  for (const auto& s : stage_registry()) msg += " " + s.name;
  throw ConfigError(msg);
}

std::vector<BranchCase> enumerate_cases(const StageConfig& stage) {
  return enumerate_cases(stage, stage.min_size, stage.size_cap);
}

std::vector<BranchCase> enumerate_cases(const StageConfig& stage, std::size_t min_size, std::size_t max_size) {
  // Frequency classes in order; the last slot (index freq_cap + 1) is r_gt.
  const std::size_t first = stage.r1_allowed ? 1 : 2;
  const std::size_t gt_slot = stage.freq_cap + 1;
  std::vector<BranchCase> out;
  std::vector<std::size_t> counts(gt_slot + 1, 0);
  std::function<void(std::size_t, std::size_t, std::size_t)> fill = [&](std::size_t slot, std::size_t left,
                                                                         std::size_t size) {
    if (slot == gt_slot) {
      BranchCase c;
      c.size = size;
      c.r.assign(counts.begin(), counts.begin() + gt_slot);
      c.r_gt = left;
      out.push_back(std::move(c));
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      counts[slot] = k;
      fill(slot + 1, left - k, size);
    }
    counts[slot] = 0;
  };
  for (std::size_t size = std::max<std::size_t>(min_size, 1); size <= max_size; ++size) {
    fill(first, size, size);
  }
  return out;
}

double dk_in(const StageConfig& stage, const WeightVector& w, const BranchCase& c) {
  double elements = 0.0;
  double degree = 0.0;
  for (std::size_t i = 1; i < c.r.size(); ++i) {
    elements += static_cast<double>(c.r[i]) * w.v(i);
    degree += static_cast<double>((i - 1) * c.r[i]);
  }
  elements += static_cast<double>(c.r_gt);
  degree += static_cast<double>(stage.freq_cap * c.r_gt);
  return w.w(c.size) + elements + w.dw(c.size) * degree;
}

double dk_out(const StageConfig& stage, const WeightVector& w, const BranchCase& c) {
  const std::size_t s = c.size;
  const double r2 = static_cast<double>(c.count(2));
  const bool has_r2 = c.count(2) > 0;
  double out = w.w(s);
  for (std::size_t i = 1; i < c.r.size(); ++i) out += static_cast<double>(c.r[i]) * w.dv(i);
  auto when = [](bool cond) { return cond ? 1.0 : 0.0; };
  switch (stage.formula) {
    case OutFormula::trivial:
    case OutFormula::stop_size_one:
      break;
    case OutFormula::include_freq_one:
      out += when(has_r2) * w.w(1) + when(s == 2 && c.count(2) == 2) * w.dw(2);
      break;
    case OutFormula::subset_rule:
      out += when(has_r2) * (w.w(2) + w.v(2)) + when(s == 2 && c.count(2) == 2) * w.dw(2);
      break;
    case OutFormula::matching_size_two:
      out += when(has_r2) * (w.w(2) + w.v(2)) +
             when(s == 3 && c.count(2) >= 2) * (w.dw(3) + when(c.count(2) == 3) * w.w(2)) +
             when(s == 4 && c.count(2) == 4) * w.w(4);
      break;
    case OutFormula::subsumption_rule:
      out += when(has_r2) * (r2 * w.w(2) + w.v(2)) + when(s == 3 && c.count(2) == 3) * w.dv(3);
      break;
    case OutFormula::avoid_branchings:
      out += r2 * (w.w(2) + w.v(2)) + when(c.count(2) > 1) * (r2 - 1.0) * w.dw(s);
      break;
    case OutFormula::connected_components:
      out += r2 * (w.w(2) + w.v(2) + w.dw(s));
      break;
    default:
      throw ConfigError("unknown discard-branch formula");
  }
  return out;
}

CaseReduction reductions(const StageConfig& stage, const WeightVector& w, const BranchCase& c) {
  return {dk_out(stage, w, c), dk_in(stage, w, c)};
}

WeightVector capped_ones(const StageConfig& stage) {
  WeightVector w(stage.freq_cap);
  for (std::size_t i = 1; i < stage.freq_cap; ++i) {
    w.set_v(i, stage.v_pinned(i) ? 0.0 : 1.0);
    w.set_w(i, stage.w_pinned(i) ? 0.0 : 1.0);
  }
  return w;
}

WeightVector weights_from_lists(const StageConfig& stage, const std::vector<double>& v,
                                const std::vector<double>& w) {
  WeightVector out = capped_ones(stage);
  auto apply = [&](const std::vector<double>& list, bool is_v) {
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::size_t i = k + 1;
      if (i >= stage.freq_cap) {
        if (list[k] != 1.0) throw ConfigError("weight given beyond the stage's cap");
        continue;
      }
      if ((is_v ? stage.v_pinned(i) : stage.w_pinned(i)) && list[k] != 0.0) {
        throw ConfigError("weight given for an index pinned to zero");
      }
      if (is_v) {
        out.set_v(i, list[k]);
      } else {
        out.set_w(i, list[k]);
      }
    }
  };
  apply(v, true);
  apply(w, false);
  return out;
}

std::size_t concavity_start(const StageConfig& stage) {
  std::size_t last_pinned = 0;
  for (std::size_t i : stage.pinned_w) last_pinned = std::max(last_pinned, i);
  return last_pinned + 2;
}

bool satisfies_invariants(const StageConfig& stage, const WeightVector& w, double tol) {
  if (w.cap() != stage.freq_cap) return false;
  for (std::size_t i = 0; i <= stage.freq_cap; ++i) {
    if (w.v(i) < -tol || w.v(i) > 1.0 + tol || w.w(i) < -tol || w.w(i) > 1.0 + tol) return false;
    if (stage.v_pinned(i) && w.v(i) != 0.0) return false;
    if (stage.w_pinned(i) && w.w(i) != 0.0) return false;
    if (i >= 1 && (w.dv(i) < -tol || w.dw(i) < -tol)) return false;
  }
  for (std::size_t i = concavity_start(stage); i <= stage.freq_cap; ++i) {
    if (w.dw(i) > w.dw(i - 1) + tol) return false;
  }
  return true;
}

}  // namespace msc::analysis
