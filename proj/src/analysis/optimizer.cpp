#include "msc/analysis/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "msc/analysis/branching.hpp"
#include "msc/errors.hpp"
#include "msc/generate.hpp"
#include "simplex.hpp"

namespace msc::analysis {

QValue q(const StageConfig& stage, const WeightVector& w, const std::vector<BranchCase>& cases,
         double relative_tol) {
  QValue result;
  std::vector<double> alphas;
  alphas.reserve(cases.size());
  for (const auto& c : cases) {
    alphas.push_back(branching_number(reductions(stage, w, c)));
    result.alpha = std::max(result.alpha, alphas.back());
  }
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i] >= result.alpha * (1.0 - relative_tol)) result.worst.push_back(i);
  }
  return result;
}

QValue q(const StageConfig& stage, const WeightVector& w, double relative_tol) {
  return q(stage, w, enumerate_cases(stage), relative_tol);
}

double round_up(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::ceil(x * scale - 1e-8) / scale;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Value of one weight entry as an affine function of the free variables.
struct Affine {
  double constant = 0.0;
  std::vector<double> coef;
};

/// The stage's weights problem, linearised: every case's reductions are
/// affine in the free weights, so they are tabulated once.
class WeightProblem {
 public:
  explicit WeightProblem(const StageConfig& stage) : stage_(stage), cases_(enumerate_cases(stage)) {
    for (std::size_t i = 1; i < stage.freq_cap; ++i) {
      if (!stage.v_pinned(i)) free_.push_back({true, i});
    }
    for (std::size_t i = 1; i < stage.freq_cap; ++i) {
      if (!stage.w_pinned(i)) free_.push_back({false, i});
    }
    const std::size_t n = free_.size();
    const std::size_t m = cases_.size();
    out0_.resize(m);
    in0_.resize(m);
    out_coef_.assign(m * n, 0.0);
    in_coef_.assign(m * n, 0.0);
    const WeightVector zero = weights(std::vector<double>(n, 0.0));
    for (std::size_t c = 0; c < m; ++c) {
      out0_[c] = dk_out(stage, zero, cases_[c]);
      in0_[c] = dk_in(stage, zero, cases_[c]);
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<double> unit(n, 0.0);
      unit[j] = 1.0;
      const WeightVector basis = weights(unit);
      for (std::size_t c = 0; c < m; ++c) {
        out_coef_[c * n + j] = dk_out(stage, basis, cases_[c]) - out0_[c];
        in_coef_[c * n + j] = dk_in(stage, basis, cases_[c]) - in0_[c];
      }
    }
    build_constraints();
  }

  std::size_t dim() const { return free_.size(); }
  const std::vector<BranchCase>& cases() const { return cases_; }

  WeightVector weights(const std::vector<double>& x) const {
    WeightVector w = capped_ones(stage_);
    for (std::size_t j = 0; j < free_.size(); ++j) {
      if (free_[j].is_v) {
        w.set_v(free_[j].index, x[j]);
      } else {
        w.set_w(free_[j].index, x[j]);
      }
    }
    return w;
  }

  /// Branching numbers of all cases; +inf where a reduction is not positive.
  void alphas(const std::vector<double>& x, std::vector<double>& out,
              std::vector<double>* grads = nullptr) const {
    const std::size_t n = dim();
    out.resize(cases_.size());
    if (grads) grads->assign(cases_.size() * n, 0.0);
    for (std::size_t c = 0; c < cases_.size(); ++c) {
      double a = out0_[c];
      double b = in0_[c];
      for (std::size_t j = 0; j < n; ++j) {
        a += out_coef_[c * n + j] * x[j];
        b += in_coef_[c * n + j] * x[j];
      }
      if (a <= 1e-12 || b <= 1e-12) {
        out[c] = kInf;
        continue;
      }
      if (!grads) {
        out[c] = branching_number(a, b);
        continue;
      }
      const BranchingRoot root = branching_root(a, b);
      out[c] = root.alpha;
      for (std::size_t j = 0; j < n; ++j) {
        (*grads)[c * n + j] = root.d_out * out_coef_[c * n + j] + root.d_in * in_coef_[c * n + j];
      }
    }
  }

  double value(const std::vector<double>& x) const {
    std::vector<double> a;
    alphas(x, a);
    return *std::max_element(a.begin(), a.end());
  }

  bool feasible(const std::vector<double>& x, double tol = 1e-12) const {
    for (double xi : x) {
      if (xi < -tol || xi > 1.0 + tol) return false;
    }
    return slack_violation(x) <= tol;
  }

  /// Largest violation of the structural rows G x <= h.
  double slack_violation(const std::vector<double>& x) const {
    double worst = 0.0;
    for (std::size_t r = 0; r < rhs_.size(); ++r) {
      double lhs = 0.0;
      for (std::size_t j = 0; j < dim(); ++j) lhs += rows_[r * dim() + j] * x[j];
      worst = std::max(worst, lhs - rhs_[r]);
    }
    return worst;
  }

  const std::vector<double>& rows() const { return rows_; }
  const std::vector<double>& rhs() const { return rhs_; }

  /// Feasible point drawn at random: sorted uniforms for v, non-increasing
  /// increments summing to one for w.
  std::vector<double> random_point(Rng& rng) const {
    std::vector<double> x(dim(), 0.0);
    std::vector<std::size_t> vj, wj;
    for (std::size_t j = 0; j < dim(); ++j) (free_[j].is_v ? vj : wj).push_back(j);
    std::vector<double> vs(vj.size());
    for (double& u : vs) u = rng.unit();
    std::sort(vs.begin(), vs.end());
    for (std::size_t k = 0; k < vj.size(); ++k) x[vj[k]] = vs[k];
    std::vector<double> inc(wj.size() + 1);
    for (double& u : inc) u = rng.unit() + 1e-3;
    std::sort(inc.begin(), inc.end(), std::greater<>());
    const double total = std::accumulate(inc.begin(), inc.end(), 0.0);
    double acc = 0.0;
    for (std::size_t k = 0; k < wj.size(); ++k) {
      acc += inc[k] / total;
      x[wj[k]] = std::min(acc, 1.0);
    }
    return x;
  }

  /// Clip and restore monotone order along v and w; concavity is left to the
  /// feasibility check.
  void repair(std::vector<double>& x) const {
    double last_v = 0.0;
    double last_w = 0.0;
    for (std::size_t j = 0; j < dim(); ++j) {
      x[j] = std::clamp(x[j], 0.0, 1.0);
      double& last = free_[j].is_v ? last_v : last_w;
      x[j] = std::max(x[j], last);
      last = x[j];
    }
  }

 private:
  struct Free {
    bool is_v;
    std::size_t index;
  };

  Affine entry(bool is_v, std::size_t i) const {
    Affine a;
    a.coef.assign(dim(), 0.0);
    if (i >= stage_.freq_cap) {
      a.constant = 1.0;
      return a;
    }
    for (std::size_t j = 0; j < dim(); ++j) {
      if (free_[j].is_v == is_v && free_[j].index == i) a.coef[j] = 1.0;
    }
    return a;
  }

  void add_row(const Affine& lhs) {
    bool any = std::any_of(lhs.coef.begin(), lhs.coef.end(), [](double c) { return c != 0.0; });
    if (!any) {
      if (lhs.constant > 1e-15) throw ConfigError("stage constraints are infeasible");
      return;
    }
    rows_.insert(rows_.end(), lhs.coef.begin(), lhs.coef.end());
    rhs_.push_back(-lhs.constant);
  }

  static Affine combine(const Affine& a, double ka, const Affine& b, double kb) {
    Affine out;
    out.constant = ka * a.constant + kb * b.constant;
    out.coef.resize(a.coef.size());
    for (std::size_t j = 0; j < a.coef.size(); ++j) out.coef[j] = ka * a.coef[j] + kb * b.coef[j];
    return out;
  }

  void build_constraints() {
    const std::size_t p = stage_.freq_cap;
    for (bool is_v : {true, false}) {
      for (std::size_t i = 1; i <= p; ++i) {
        // x_{i-1} - x_i <= 0
        add_row(combine(entry(is_v, i - 1), 1.0, entry(is_v, i), -1.0));
      }
    }
    for (std::size_t i = concavity_start(stage_); i <= p; ++i) {
      // w_i - 2 w_{i-1} + w_{i-2} <= 0
      Affine lhs = combine(entry(false, i), 1.0, entry(false, i - 1), -2.0);
      add_row(combine(lhs, 1.0, entry(false, i - 2), 1.0));
    }
  }

  const StageConfig& stage_;
  std::vector<BranchCase> cases_;
  std::vector<Free> free_;
  std::vector<double> out0_, in0_, out_coef_, in_coef_;
  std::vector<double> rows_, rhs_;
};

struct SearchState {
  std::vector<double> x;
  double value = kInf;
  std::size_t evaluations = 0;
};

/// Randomised coordinate search from several feasible starts.
SearchState coarse_search(const WeightProblem& problem, const OptimizerOptions& options) {
  Rng rng(options.seed);
  SearchState best;
  const std::size_t n = problem.dim();
  for (std::size_t restart = 0; restart < std::max<std::size_t>(options.restarts, 1); ++restart) {
    if (best.evaluations >= options.evaluation_budget) break;
    std::vector<double> x = problem.random_point(rng);
    double fx = problem.value(x);
    std::size_t used = 1;
    double step = options.initial_step;
    while (step >= options.final_step && used < options.evaluations_per_restart) {
      bool improved = false;
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      for (std::size_t k = n; k > 1; --k) std::swap(order[k - 1], order[rng.below(k)]);
      for (std::size_t j : order) {
        for (double sign : {1.0, -1.0}) {
          std::vector<double> y = x;
          y[j] += sign * step;
          problem.repair(y);
          if (!problem.feasible(y)) continue;
          const double fy = problem.value(y);
          ++used;
          if (fy < fx) {
            x = std::move(y);
            fx = fy;
            improved = true;
            break;
          }
        }
        if (used >= options.evaluations_per_restart) break;
      }
      if (!improved) step *= 0.5;
    }
    best.evaluations += used;
    if (fx < best.value) {
      best.value = fx;
      best.x = x;
    }
  }
  return best;
}

/// Trust-region successive linear programming on the max of the case roots.
/// Returns true when the predicted decrease vanished.
bool refine(const WeightProblem& problem, SearchState& state, const OptimizerOptions& options) {
  const std::size_t n = problem.dim();
  const std::size_t cases = problem.cases().size();
  const std::size_t max_active = 1200;
  double radius = 0.05;
  std::vector<double> alpha, grads, trial;
  for (std::size_t iter = 0; iter < options.refine_iterations; ++iter) {
    if (state.evaluations >= options.evaluation_budget) return false;
    problem.alphas(state.x, alpha, &grads);
    ++state.evaluations;
    const double current = *std::max_element(alpha.begin(), alpha.end());
    state.value = current;

    double gnorm = 0.0;
    for (std::size_t c = 0; c < cases; ++c) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += std::abs(grads[c * n + j]);
      gnorm = std::max(gnorm, s);
    }
    std::vector<std::size_t> active;
    for (std::size_t c = 0; c < cases; ++c) {
      if (alpha[c] >= current - 2.0 * radius * gnorm - 1e-12) active.push_back(c);
    }
    if (active.size() > max_active) {
      std::partial_sort(active.begin(), active.begin() + max_active, active.end(),
                        [&](std::size_t a, std::size_t b) { return alpha[a] > alpha[b]; });
      active.resize(max_active);
    }

    // Variables: d = p - m (2n), s = current + 1 - t. Maximise s.
    const std::size_t vars = 2 * n + 1;
    std::vector<double> obj(vars, 0.0);
    obj[2 * n] = 1.0;
    std::vector<double> a;
    std::vector<double> b;
    auto push = [&](const std::vector<double>& row, double rhs) {
      a.insert(a.end(), row.begin(), row.end());
      b.push_back(std::max(0.0, rhs));
    };
    std::vector<double> row(vars, 0.0);
    for (std::size_t c : active) {
      for (std::size_t j = 0; j < n; ++j) {
        row[j] = grads[c * n + j];
        row[n + j] = -grads[c * n + j];
      }
      row[2 * n] = 1.0;
      push(row, current + 1.0 - alpha[c]);
    }
    const auto& g = problem.rows();
    const auto& h = problem.rhs();
    for (std::size_t r = 0; r < h.size(); ++r) {
      double lhs = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        row[j] = g[r * n + j];
        row[n + j] = -g[r * n + j];
        lhs += g[r * n + j] * state.x[j];
      }
      row[2 * n] = 0.0;
      push(row, h[r] - lhs);
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(row.begin(), row.end(), 0.0);
      row[j] = 1.0;
      push(row, std::min(radius, 1.0 - state.x[j]));
      std::fill(row.begin(), row.end(), 0.0);
      row[n + j] = 1.0;
      push(row, std::min(radius, state.x[j]));
    }
    const detail::LpResult lp = detail::maximize(obj, a, b);
    if (lp.status != detail::LpStatus::optimal) {
      radius *= 0.25;
      if (radius < 1e-13) return false;
      continue;
    }
    const double predicted = lp.x[2 * n] - 1.0;  // current - t
    if (predicted <= 1e-13 * current) return true;

    trial = state.x;
    for (std::size_t j = 0; j < n; ++j) trial[j] = std::clamp(trial[j] + lp.x[j] - lp.x[n + j], 0.0, 1.0);
    double value = kInf;
    if (problem.slack_violation(trial) <= 1e-13) {
      value = problem.value(trial);
      ++state.evaluations;
    }
    if (value < current) {
      const double ratio = (current - value) / predicted;
      state.x = trial;
      state.value = value;
      if (ratio > 0.5) radius = std::min(2.0 * radius, 0.25);
      if (ratio < 0.1) radius *= 0.25;
    } else {
      radius *= 0.25;
      if (radius < 1e-13) return true;
    }
  }
  return false;
}

}  // namespace

AnalysisReport optimize(const StageConfig& stage, const OptimizerOptions& options) {
  WeightProblem problem(stage);
  SearchState state = coarse_search(problem, options);
  const bool converged = refine(problem, state, options);

  AnalysisReport report;
  report.stage = stage.name;
  report.weights = problem.weights(state.x);
  const QValue worst = q(stage, report.weights, problem.cases(), options.tight_tolerance);
  report.alpha = worst.alpha;
  report.alpha_rounded_up = round_up(worst.alpha, 4);
  report.ds_bound = report.alpha_rounded_up * report.alpha_rounded_up;
  for (std::size_t i : worst.worst) report.tight_cases.push_back(problem.cases()[i]);
  report.converged = converged && satisfies_invariants(stage, report.weights);
  report.evaluations = state.evaluations;
  return report;
}

std::vector<AnalysisReport> stage_table(const OptimizerOptions& options) {
  std::vector<AnalysisReport> reports;
  for (const auto& stage : stage_registry()) reports.push_back(optimize(stage, options));
  return reports;
}

}  // namespace msc::analysis
