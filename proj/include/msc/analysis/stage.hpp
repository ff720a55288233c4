#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "msc/weights.hpp"

namespace msc::analysis {

/// Discard-branch formula of each design stage. The include-branch
/// reduction is shared by all stages.
enum class OutFormula {
  trivial,                 // w_|S| + sum r_i dv_i
  stop_size_one,           // same expression, larger minimum |S|
  include_freq_one,        // + [r2>0] w_1 + [|S|=r2=2] dw_2
  subset_rule,             // + [r2>0](w_2+v_2) + [|S|=r2=2] dw_2
  matching_size_two,       // + [r2>0](w_2+v_2) + [|S|=3,r2>=2](dw_3 + [r2=3]w_2) + [|S|=r2=4] w_4
  subsumption_rule,        // + [r2>0](r2 w_2 + v_2) + [|S|=r2=3] dv_3
  avoid_branchings,        // + r2(w_2+v_2) + [r2>1](r2-1) dw_|S|
  connected_components,    // + r2(w_2+v_2+dw_|S|)
};

/// One row of the design trajectory.
///
/// Branch cases have min_size <= |S| <= size_cap. Element frequencies
/// 1..freq_cap are tracked individually (1 only when r1_allowed); higher
/// frequencies are lumped into r_gt. Weights at index >= freq_cap are 1.
struct StageConfig {
  std::string name;
  std::string title;
  std::size_t min_size = 3;
  std::size_t size_cap = 8;
  std::size_t freq_cap = 7;
  bool r1_allowed = false;
  std::vector<std::size_t> pinned_v;  // indices fixed to 0 (index 0 always is)
  std::vector<std::size_t> pinned_w;
  OutFormula formula = OutFormula::connected_components;
  double reference_alpha = 0.0;     // set-cover bound base, 4 decimals
  double reference_ds_bound = 0.0;  // dominating-set bound base, 4 decimals

  bool v_pinned(std::size_t i) const;
  bool w_pinned(std::size_t i) const;
};

/// The eight stages, in design order.
const std::vector<StageConfig>& stage_registry();

/// Throws ConfigError listing valid names.
const StageConfig& find_stage(std::string_view name);

std::vector<std::string> stage_names();

/// |S| split by element frequency: r[i] elements of frequency i for
/// i <= freq_cap (r[0] unused, r[1] zero unless allowed), r_gt above.
struct BranchCase {
  std::size_t size = 0;
  std::vector<std::size_t> r;
  std::size_t r_gt = 0;

  std::size_t count(std::size_t freq) const { return freq < r.size() ? r[freq] : 0; }
  friend bool operator==(const BranchCase&, const BranchCase&) = default;
};

/// Every composition of |S| over the tracked frequencies, sizes ascending.
std::vector<BranchCase> enumerate_cases(const StageConfig& stage);

/// Same, but for sizes [min_size, max_size] regardless of the stage's size cap.
std::vector<BranchCase> enumerate_cases(const StageConfig& stage, std::size_t min_size, std::size_t max_size);

struct CaseReduction {
  double dk_out = 0.0;
  double dk_in = 0.0;
};

/// Include branch: w_|S| + sum r_i v_i + dw_|S| * sum (i-1) r_i. Elements in
/// r_gt count with weight 1 and factor freq_cap (their least possible i-1).
double dk_in(const StageConfig& stage, const WeightVector& w, const BranchCase& c);

/// Discard branch per the stage's formula. r_gt elements contribute no dv.
double dk_out(const StageConfig& stage, const WeightVector& w, const BranchCase& c);

CaseReduction reductions(const StageConfig& stage, const WeightVector& w, const BranchCase& c);

/// Weight vector with every free entry 1 and pinned entries 0.
WeightVector capped_ones(const StageConfig& stage);

/// Weights parsed from a stage's printed vectors (v_1, v_2, ...), (w_1, ...).
/// Missing trailing entries are 1.
WeightVector weights_from_lists(const StageConfig& stage, const std::vector<double>& v,
                                const std::vector<double>& w);

/// Bounds, pinning, monotonicity and w concavity, each to within `tol`.
bool satisfies_invariants(const StageConfig& stage, const WeightVector& w, double tol = 1e-12);

/// First index i for which dw_i <= dw_{i-1} is imposed: concavity starts
/// after the last pinned w index.
std::size_t concavity_start(const StageConfig& stage);

}  // namespace msc::analysis
