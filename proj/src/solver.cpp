#include "msc/solver.hpp"

#include <algorithm>
#include <memory>
#include <unordered_set>

#include "msc/errors.hpp"
#include "msc/matching.hpp"
#include "msc/memo.hpp"
#include "msc/reductions.hpp"

namespace msc {

namespace {

class Search {
 public:
  explicit Search(const SolverOptions& options) : options_(options) {
    if (options_.memoize) memo_ = std::make_unique<MemoStore>(options_.memo_budget_bytes);
  }

  std::vector<SetId> solve(const SetCoverInstance& inst, std::uint64_t depth) {
    ++stats_.nodes_expanded;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (options_.node_limit != 0 && stats_.nodes_expanded > options_.node_limit) {
      throw ResourceError("node expansion limit reached", stats_);
    }
    if (inst.empty()) return {};
    if (inst.max_set_size() <= 2) return solve_small_sets(inst).chosen;

    if (!memo_) return reduce_or_branch(inst, depth);

    CanonicalForm form = canonicalize(inst);
    if (auto hit = memo_->lookup(form.key)) {
      ++stats_.memo_hits;
      std::vector<SetId> cover;
      cover.reserve(hit->size());
      for (std::uint32_t pos : *hit) cover.push_back(form.order[pos]);
      std::sort(cover.begin(), cover.end());
      return cover;
    }
    std::vector<SetId> cover = reduce_or_branch(inst, depth);
    std::unordered_set<SetId> chosen(cover.begin(), cover.end());
    std::vector<std::uint32_t> positions;
    for (std::uint32_t i = 0; i < form.order.size(); ++i) {
      if (chosen.count(form.order[i])) positions.push_back(i);
    }
    if (!memo_->store(form.key, std::move(positions))) {
      throw ResourceError("memo store budget exceeded", stats_);
    }
    return cover;
  }

  SearchStats& stats() { return stats_; }

 private:
  std::vector<SetId> reduce_or_branch(const SetCoverInstance& inst, std::uint64_t depth) {
    if (options_.split_components) {
      if (auto split = rule_split(inst); split.applied()) {
        std::vector<SetId> cover;
        for (const auto& part : split.parts) {
          auto sub = solve(part, depth + 1);
          cover.insert(cover.end(), sub.begin(), sub.end());
        }
        std::sort(cover.begin(), cover.end());
        return cover;
      }
    }
    if (auto r = rule_subset(inst); r.applied()) return solve(r.residual, depth + 1);
    if (auto r = rule_subsumption(inst); r.applied()) return solve(r.residual, depth + 1);
    if (auto r = rule_singleton(inst); r.applied()) return with(r.set, solve(r.residual, depth + 1));
    if (auto r = rule_freq2_counting(inst); r.applied()) return with(r.set, solve(r.residual, depth + 1));
    return branch(inst, depth);
  }

  std::vector<SetId> branch(const SetCoverInstance& inst, std::uint64_t depth) {
    // Largest set, smallest id on ties (sets are stored in id order).
    const SetRecord* pick = &inst.sets().front();
    for (const auto& s : inst.sets()) {
      if (s.size() > pick->size()) pick = &s;
    }
    if (pick->size() < 3) throw std::logic_error("branching on a set of size < 3");
    ++stats_.branchings;
    if (stats_.min_branch_size == 0 || pick->size() < stats_.min_branch_size) {
      stats_.min_branch_size = pick->size();
    }
    const SetId id = pick->id;

    // Discarding S is infeasible when S holds an element no other set covers.
    bool can_discard = true;
    for (Element e : pick->elements) {
      if (inst.frequency(e) == 1) {
        can_discard = false;
        break;
      }
    }

    std::vector<SetId> include;
    std::vector<SetId> discard;
    auto run_include = [&] { include = with(id, solve(take_set(inst, id), depth + 1)); };
    auto run_discard = [&] { discard = solve(without_set(inst, id), depth + 1); };
    if (!can_discard) {
      run_include();
      return include;
    }
    if (options_.include_first) {
      run_include();
      run_discard();
    } else {
      run_discard();
      run_include();
    }
    return include.size() <= discard.size() ? include : discard;
  }

  static std::vector<SetId> with(SetId id, std::vector<SetId> cover) {
    cover.insert(std::upper_bound(cover.begin(), cover.end(), id), id);
    return cover;
  }

  SolverOptions options_;
  SearchStats stats_;
  std::unique_ptr<MemoStore> memo_;
};

}  // namespace

SolveResult msc(const SetCoverInstance& inst, const SolverOptions& options) {
  auto start = std::chrono::steady_clock::now();
  Search search(options);
  SolveResult result;
  try {
    result.cover.chosen = search.solve(inst, 0);
  } catch (const ResourceError& e) {
    SearchStats partial = e.stats();
    partial.wall_time = std::chrono::steady_clock::now() - start;
    throw ResourceError(e.what(), partial);
  }
  result.stats = search.stats();
  result.stats.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

SolveResult msc_memo(const SetCoverInstance& inst, SolverOptions options) {
  options.memoize = true;
  return msc(inst, options);
}

DominatingSetResult solve_dominating_set(const Graph& g, const SolverOptions& options) {
  SolveResult solved = msc(from_graph(g), options);
  DominatingSetResult result;
  result.nodes.assign(solved.cover.chosen.begin(), solved.cover.chosen.end());
  std::sort(result.nodes.begin(), result.nodes.end());
  result.stats = solved.stats;
  return result;
}

bool is_dominating_set(const Graph& g, const std::vector<Node>& nodes) {
  std::vector<SetId> ids(nodes.begin(), nodes.end());
  return is_cover(from_graph(g), ids);
}

}  // namespace msc
