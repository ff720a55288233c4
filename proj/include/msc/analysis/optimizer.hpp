#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "msc/analysis/stage.hpp"
#include "msc/weights.hpp"

namespace msc::analysis {

/// q(v, w): the largest branching number over the stage's cases.
struct QValue {
  double alpha = 0.0;
  std::vector<std::size_t> worst;  // indices into the case list, within tolerance of alpha
};

/// `relative_tol` selects the worst cases: alpha_c >= alpha * (1 - tol).
QValue q(const StageConfig& stage, const WeightVector& w, const std::vector<BranchCase>& cases,
         double relative_tol = 1e-6);
QValue q(const StageConfig& stage, const WeightVector& w, double relative_tol = 1e-6);

struct OptimizerOptions {
  std::uint64_t seed = 42;
  /// Randomised coordinate search: restarts and per-restart evaluation cap.
  std::size_t restarts = 20;
  std::size_t evaluations_per_restart = 150;
  /// Total evaluation budget across both phases.
  std::size_t evaluation_budget = 100000;
  double initial_step = 0.1;
  double final_step = 1e-3;
  /// Trust-region refinement by successive linear programs.
  std::size_t refine_iterations = 400;
  double tight_tolerance = 1e-6;
};

struct AnalysisReport {
  std::string stage;
  WeightVector weights;
  double alpha = 0.0;
  double alpha_rounded_up = 0.0;  // upward 4-decimal rounding
  double ds_bound = 0.0;          // alpha_rounded_up^2, the base per graph node
  std::vector<BranchCase> tight_cases;
  bool converged = false;
  std::size_t evaluations = 0;
};

/// Upward rounding to `decimals` places, ignoring float noise below 1e-12.
double round_up(double x, int decimals = 4);

/// Minimises q over weights satisfying the stage's invariants. Never
/// throws on non-convergence: the report's `converged` flag is false and
/// it carries the best point found.
AnalysisReport optimize(const StageConfig& stage, const OptimizerOptions& options = {});

/// One report per registered stage, in registry order.
std::vector<AnalysisReport> stage_table(const OptimizerOptions& options = {});

}  // namespace msc::analysis
