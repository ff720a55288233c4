#include "msc/analysis/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "msc/errors.hpp"

namespace msc::analysis {

using nlohmann::json;

std::string describe(const BranchCase& c, std::size_t freq_cap) {
  std::string out = "|S|=" + std::to_string(c.size);
  for (std::size_t i = 1; i < c.r.size(); ++i) {
    if (c.r[i] != 0) out += " r" + std::to_string(i) + "=" + std::to_string(c.r[i]);
  }
  if (c.r_gt != 0) out += " r>" + std::to_string(freq_cap) + "=" + std::to_string(c.r_gt);
  return out;
}

json to_json(const BranchCase& c) {
  return json{{"size", c.size}, {"r", c.r}, {"r_gt", c.r_gt}};
}

json to_json(const WeightVector& w) {
  json v = json::array();
  json s = json::array();
  for (std::size_t i = 0; i <= w.cap(); ++i) {
    v.push_back(w.v(i));
    s.push_back(w.w(i));
  }
  return json{{"cap", w.cap()}, {"v", v}, {"w", s}};
}

json to_json(const AnalysisReport& report) {
  json tight = json::array();
  for (const auto& c : report.tight_cases) tight.push_back(to_json(c));
  return json{{"stage", report.stage},
              {"alpha", report.alpha},
              {"alpha_rounded_up", report.alpha_rounded_up},
              {"ds_bound", report.ds_bound},
              {"converged", report.converged},
              {"evaluations", report.evaluations},
              {"weights", to_json(report.weights)},
              {"tight_cases", tight}};
}

namespace {

template <typename T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("report field '") + key + "': " + e.what());
  }
}

WeightVector weights_from_json(const json& j) {
  const auto cap = field<std::size_t>(j, "cap");
  const auto v = field<std::vector<double>>(j, "v");
  const auto w = field<std::vector<double>>(j, "w");
  if (cap == 0 || v.size() != cap + 1 || w.size() != cap + 1) throw ParseError("weights: bad vector length");
  WeightVector out(cap);
  for (std::size_t i = 1; i < cap; ++i) {
    out.set_v(i, v[i]);
    out.set_w(i, w[i]);
  }
  return out;
}

void dump(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map keeps keys sorted
        if (!first) out += ',';
        first = false;
        out += json(key).dump();
        out += ':';
        dump(value, out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      double x = j.get<double>();
      if (!std::isfinite(x)) throw DomainError("cannot serialise a non-finite number");
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6f", x);
      std::string s = buf;
      if (s == "-0.000000") s = "0.000000";
      out += s;
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  r.stage = field<std::string>(j, "stage");
  r.alpha = field<double>(j, "alpha");
  r.alpha_rounded_up = field<double>(j, "alpha_rounded_up");
  r.ds_bound = field<double>(j, "ds_bound");
  r.converged = field<bool>(j, "converged");
  r.evaluations = field<std::size_t>(j, "evaluations");
  r.weights = weights_from_json(j.at("weights"));
  for (const auto& c : field<json>(j, "tight_cases")) {
    BranchCase bc;
    bc.size = field<std::size_t>(c, "size");
    bc.r = field<std::vector<std::size_t>>(c, "r");
    bc.r_gt = field<std::size_t>(c, "r_gt");
    r.tight_cases.push_back(std::move(bc));
  }
  return r;
}

std::string canonical_dump(const json& j) {
  std::string out;
  dump(j, out);
  return out;
}

namespace {

std::string fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

std::size_t cap_of(const AnalysisReport& r) { return r.weights.cap(); }

}  // namespace

void print_table(std::ostream& out, const std::vector<AnalysisReport>& reports, bool with_tight) {
  char line[256];
  std::snprintf(line, sizeof line, "%-3s %-30s %-10s %-8s %-8s %-9s %-8s %-6s %s\n", "#", "stage", "alpha",
                "O(a^d)", "ref", "O(a^n)", "ref", "tight", "status");
  out << line;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    std::string ref_alpha = "-";
    std::string ref_ds = "-";
    for (const auto& s : stage_registry()) {
      if (s.name == r.stage) {
        ref_alpha = fixed(s.reference_alpha, 4);
        ref_ds = fixed(s.reference_ds_bound, 4);
      }
    }
    std::snprintf(line, sizeof line, "%-3zu %-30s %-10s %-8s %-8s %-9s %-8s %-6zu %s\n", i + 1, r.stage.c_str(),
                  fixed(r.alpha, 7).c_str(), fixed(r.alpha_rounded_up, 4).c_str(), ref_alpha.c_str(),
                  fixed(r.ds_bound, 5).c_str(), ref_ds.c_str(), r.tight_cases.size(),
                  r.converged ? "ok" : "NOT CONVERGED");
    out << line;
    if (with_tight) {
      for (const auto& c : r.tight_cases) out << "      " << describe(c, cap_of(r)) << '\n';
    }
  }
}

void print_report(std::ostream& out, const AnalysisReport& r, bool with_tight) {
  out << "stage      " << r.stage << '\n';
  out << "alpha      " << fixed(r.alpha, 7) << "  (rounded up " << fixed(r.alpha_rounded_up, 4) << ")\n";
  out << "ds bound   " << fixed(r.ds_bound, 5) << '\n';
  out << "converged  " << (r.converged ? "yes" : "no") << "  (" << r.evaluations << " evaluations)\n";
  out << "v         ";
  for (std::size_t i = 1; i < r.weights.cap(); ++i) out << ' ' << fixed(r.weights.v(i), 6);
  out << "\nw         ";
  for (std::size_t i = 1; i < r.weights.cap(); ++i) out << ' ' << fixed(r.weights.w(i), 6);
  out << '\n';
  out << "tight      " << r.tight_cases.size() << " case(s)\n";
  if (with_tight) {
    for (const auto& c : r.tight_cases) out << "  " << describe(c, cap_of(r)) << '\n';
  }
}

}  // namespace msc::analysis
