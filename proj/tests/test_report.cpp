#include <doctest.h>

#include <sstream>

#include "msc/analysis/report.hpp"
#include "msc/errors.hpp"

using namespace msc;
using namespace msc::analysis;

namespace {

AnalysisReport sample() {
  const auto& stage = find_stage("connected-components-final");
  AnalysisReport r;
  r.stage = stage.name;
  r.weights = weights_from_lists(stage, {0, 0.219478, 0.671386}, {0, 0.375418, 0.750835});
  r.alpha = 1.23018731;
  r.alpha_rounded_up = 1.2302;
  r.ds_bound = 1.2302 * 1.2302;
  r.converged = true;
  r.evaluations = 17;
  BranchCase c;
  c.size = 5;
  c.r = {0, 0, 0, 0, 0, 0, 1, 0};
  c.r_gt = 4;
  r.tight_cases.push_back(c);
  return r;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("canonical dump") {
    const nlohmann::json j = {{"b", 1.5}, {"a", {1, 2}}, {"c", "x"}, {"d", 0.1234567}, {"e", true}, {"f", -0.0}};
    CHECK(canonical_dump(j) == R"({"a":[1,2],"b":1.500000,"c":"x","d":0.123457,"e":true,"f":0.000000})");
  }

  TEST_CASE("report round trip is byte identical") {
    const std::string first = canonical_dump(to_json(sample()));
    CHECK(first.find("\"alpha\":1.230187") != std::string::npos);
    CHECK(first.find("0.219478") != std::string::npos);
    const std::string second = canonical_dump(nlohmann::json::parse(first));
    CHECK(second == first);
    const std::string third = canonical_dump(to_json(report_from_json(nlohmann::json::parse(first))));
    CHECK(third == first);
  }

  TEST_CASE("malformed report") {
    CHECK_THROWS_AS(report_from_json(nlohmann::json::parse(R"({"stage":"x"})")), ParseError);
  }

  TEST_CASE("labels") {
    CHECK(describe(sample().tight_cases[0], 7) == "|S|=5 r6=1 r>7=4");
  }

  TEST_CASE("text output") {
    std::ostringstream table;
    print_table(table, {sample()}, true);
    CHECK(table.str().find("connected-components-final") != std::string::npos);
    CHECK(table.str().find("1.2302") != std::string::npos);
    CHECK(table.str().find("|S|=5 r6=1 r>7=4") != std::string::npos);
    std::ostringstream single;
    print_report(single, sample(), false);
    CHECK(single.str().find("0.219478") != std::string::npos);
  }
}
