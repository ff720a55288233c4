#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "msc/analysis/optimizer.hpp"

namespace msc::analysis {

/// Short label such as "|S|=5 r6=1 r>6=4"; only non-zero counts are listed.
std::string describe(const BranchCase& c, std::size_t freq_cap);

nlohmann::json to_json(const BranchCase& c);
nlohmann::json to_json(const WeightVector& w);
nlohmann::json to_json(const AnalysisReport& report);

/// Inverse of to_json; ParseError on missing or mistyped fields.
AnalysisReport report_from_json(const nlohmann::json& j);

/// Sorted keys, no whitespace, floats printed with exactly six decimals.
/// Re-parsing the output and dumping again gives the same bytes.
std::string canonical_dump(const nlohmann::json& j);

/// Aligned text table, one row per report, plus tight cases when asked.
void print_table(std::ostream& out, const std::vector<AnalysisReport>& reports, bool with_tight);

/// Weights and tight cases of a single report.
void print_report(std::ostream& out, const AnalysisReport& report, bool with_tight);

}  // namespace msc::analysis
