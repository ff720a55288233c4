#include <doctest.h>

#include <set>

#include "msc/analysis/stage.hpp"
#include "msc/errors.hpp"

using namespace msc;
using namespace msc::analysis;

namespace {

const std::vector<double> kFinalV{0, 0.219478, 0.671386, 0.876555, 0.956850, 0.988195};
const std::vector<double> kFinalW{0, 0.375418, 0.750835, 0.905768, 0.971965, 0.998158};

BranchCase make_case(const StageConfig& stage, std::size_t size, std::vector<std::pair<std::size_t, std::size_t>> r,
                     std::size_t r_gt = 0) {
  BranchCase c;
  c.size = size;
  c.r.assign(stage.freq_cap + 1, 0);
  for (auto [i, k] : r) c.r[i] = k;
  c.r_gt = r_gt;
  return c;
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

TEST_SUITE("stage") {
  TEST_CASE("registry") {
    const std::vector<std::string> names{"trivial",           "stop-size-one",    "include-freq-one",
                                         "subset-rule",       "matching-size-two", "subsumption-rule",
                                         "avoid-unnecessary-branchings", "connected-components-final"};
    CHECK(stage_names() == names);
    CHECK(find_stage("subset-rule").formula == OutFormula::subset_rule);
    CHECK_THROWS_AS(find_stage("bogus"), ConfigError);
    try {
      find_stage("bogus");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("connected-components-final") != std::string::npos);
    }
    const auto& final_stage = find_stage("connected-components-final");
    CHECK(final_stage.min_size == 3);
    CHECK(final_stage.size_cap == 8);
    CHECK(final_stage.v_pinned(0));
    CHECK(final_stage.v_pinned(1));
    CHECK(final_stage.w_pinned(1));
    CHECK_FALSE(final_stage.w_pinned(2));
  }

  TEST_CASE("case counts") {
    const std::vector<std::size_t> expected{34, 120, 246, 1709, 1688, 1688, 6399, 6399};
    const auto& stages = stage_registry();
    for (std::size_t i = 0; i < stages.size(); ++i) {
      const auto cases = enumerate_cases(stages[i]);
      CHECK(cases.size() == expected[i]);
      std::set<std::pair<std::vector<std::size_t>, std::size_t>> unique;
      for (const auto& c : cases) {
        CHECK(c.size >= stages[i].min_size);
        CHECK(c.size <= stages[i].size_cap);
        std::size_t total = c.r_gt;
        for (auto k : c.r) total += k;
        CHECK(total == c.size);
        CHECK(c.r[0] == 0);
        if (!stages[i].r1_allowed) CHECK(c.count(1) == 0);
        unique.insert({c.r, c.r_gt});
      }
      CHECK(unique.size() == cases.size());
    }
    std::size_t stars_and_bars = 0;
    for (std::size_t s = 3; s <= 8; ++s) stars_and_bars += binom(s + 6, 6);
    CHECK(stars_and_bars == 6399);
  }

  TEST_CASE("trivial stage includes a lone frequency-one element") {
    const auto& trivial = find_stage("trivial");
    const auto cases = enumerate_cases(trivial);
    CHECK(cases.front().size == 1);
    CHECK(std::find(cases.begin(), cases.end(), make_case(trivial, 1, {{1, 1}})) != cases.end());
  }

  TEST_CASE("final-stage reductions at the reference weights") {
    const auto& stage = find_stage("connected-components-final");
    const auto w = weights_from_lists(stage, kFinalV, kFinalW);
    const auto c = make_case(stage, 3, {{2, 3}});
    CHECK(dk_in(stage, w, c) == doctest::Approx(2.535520).epsilon(1e-12));
    CHECK(dk_out(stage, w, c) == doctest::Approx(4.320208).epsilon(1e-12));
    // Tail elements: weight 1, factor 7 each in the include branch, no dv.
    const auto tail = make_case(stage, 5, {{3, 1}, {6, 1}}, 3);
    CHECK(dk_in(stage, w, tail) == doctest::Approx(7.485062).epsilon(1e-12));
    CHECK(dk_out(stage, w, tail) == doctest::Approx(1.455218).epsilon(1e-12));
  }

  TEST_CASE("flat weights") {
    for (const auto& stage : stage_registry()) {
      const WeightVector ones(stage.freq_cap);  // nothing pinned
      for (const auto& c : enumerate_cases(stage)) {
        if (c.size < 2) continue;  // dw_1 = w_1 - w_0 = 1
        CHECK(dk_in(stage, ones, c) == doctest::Approx(1.0 + static_cast<double>(c.size)));
      }
    }
    // Capped ones keep the pinned zeros; tail elements count 1 each.
    const auto& stage = find_stage("connected-components-final");
    const auto c = make_case(stage, 4, {}, 4);
    CHECK(dk_in(stage, capped_ones(stage), c) == doctest::Approx(5.0));
    CHECK(dk_out(stage, capped_ones(stage), c) == doctest::Approx(1.0));
  }

  TEST_CASE("indicator terms") {
    const auto& avoid = find_stage("avoid-unnecessary-branchings");
    const auto w = weights_from_lists(avoid, {0, 0.3, 0.7}, {0, 0.4, 0.8, 0.9});
    // r2 = 1: the (r2 - 1) dw term vanishes.
    const auto one = make_case(avoid, 3, {{2, 1}, {3, 2}});
    CHECK(dk_out(avoid, w, one) == doctest::Approx(0.8 + 0.3 + 2 * 0.4 + (0.4 + 0.3)));
    const auto two = make_case(avoid, 3, {{2, 2}, {3, 1}});
    CHECK(dk_out(avoid, w, two) == doctest::Approx(0.8 + 2 * 0.3 + 0.4 + 2 * (0.4 + 0.3) + 0.4));

    const auto& fgk = find_stage("matching-size-two");
    const auto wf = weights_from_lists(fgk, {0, 0.3, 0.7}, {0, 0.4, 0.8, 0.9});
    const auto c3 = make_case(fgk, 3, {{2, 3}});
    CHECK(dk_out(fgk, wf, c3) == doctest::Approx(0.8 + 0.9 + (0.4 + 0.3) + (0.4 + 0.4)));
    const auto c4 = make_case(fgk, 4, {{2, 4}});
    CHECK(dk_out(fgk, wf, c4) == doctest::Approx(0.9 + 1.2 + (0.4 + 0.3) + 0.9));

    const auto& sub = find_stage("subsumption-rule");
    const auto ws = weights_from_lists(sub, {0, 0.3, 0.7}, {0, 0.4, 0.8});
    const auto s3 = make_case(sub, 3, {{2, 3}});
    CHECK(dk_out(sub, ws, s3) == doctest::Approx(0.8 + 0.9 + (3 * 0.4 + 0.3) + 0.4));

    const auto& freq1 = find_stage("include-freq-one");
    const auto w1 = weights_from_lists(freq1, {0, 0.5}, {0.4, 0.8});
    const auto pair = make_case(freq1, 2, {{2, 2}});
    CHECK(dk_out(freq1, w1, pair) == doctest::Approx(0.8 + 1.0 + 0.4 + 0.4));
  }

  TEST_CASE("weights from printed lists") {
    const auto& stage = find_stage("trivial");
    const auto w = weights_from_lists(stage, {0.8808, 0.9901}, {0.9782});
    CHECK(w.v(1) == 0.8808);
    CHECK(w.w(2) == 1.0);
    CHECK(w.v(3) == 1.0);
    CHECK_NOTHROW(weights_from_lists(stage, {0.5, 0.6, 1.0}, {}));
    CHECK_THROWS_AS(weights_from_lists(stage, {0.5, 0.6, 0.9}, {}), ConfigError);
    CHECK_THROWS_AS(weights_from_lists(find_stage("subset-rule"), {0.1}, {}), ConfigError);
  }

  TEST_CASE("invariants") {
    const auto& stage = find_stage("connected-components-final");
    CHECK(concavity_start(stage) == 3);
    CHECK(concavity_start(find_stage("trivial")) == 2);
    CHECK(satisfies_invariants(stage, weights_from_lists(stage, kFinalV, kFinalW), 1e-5));
    CHECK(satisfies_invariants(stage, capped_ones(stage)));
    // Non-monotone v.
    CHECK_FALSE(satisfies_invariants(stage, weights_from_lists(stage, {0, 0.5, 0.4}, {0, 0.3, 0.6})));
    // w increments growing.
    CHECK_FALSE(satisfies_invariants(stage, weights_from_lists(stage, {0, 0.5}, {0, 0.2, 0.6})));
    // Wrong cap.
    CHECK_FALSE(satisfies_invariants(stage, WeightVector(3)));
  }
}
