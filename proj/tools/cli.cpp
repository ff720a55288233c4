#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "msc/analysis/optimizer.hpp"
#include "msc/analysis/report.hpp"
#include "msc/errors.hpp"
#include "msc/generate.hpp"
#include "msc/io.hpp"
#include "msc/oracle.hpp"
#include "msc/solver.hpp"

namespace msc::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::uint64_t seed = 42;
  bool json = false;
  bool quiet = false;
};

struct SolveArgs {
  std::string input;
  std::string format = "auto";
  bool memoize = false;
  bool include_first = false;
  std::uint64_t node_limit = 0;
  std::size_t memo_budget_mb = 1024;
};

struct AnalyzeArgs {
  std::string stage;
  bool tight = false;
  std::size_t restarts = 20;
};

struct TableArgs {
  std::size_t row = 0;
  bool tight = false;
};

struct GenArgs {
  bool graph = false;
  bool setcover = false;
  long long n = -1;
  double p = 0.3;
  long long d = -1;
  double density = 0.3;
  std::string output;
};

struct VerifyArgs {
  std::size_t count = 0;  // 0: 500 set-cover instances or 300 graphs
  std::size_t d_max = 18;
  bool graphs = false;
  std::size_t n_max = 9;
  bool corrupt = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

json stats_json(const SearchStats& s) {
  return json{{"nodes_expanded", s.nodes_expanded},
              {"max_depth", s.max_depth},
              {"memo_hits", s.memo_hits},
              {"branchings", s.branchings},
              {"wall_time_ms", std::chrono::duration<double, std::milli>(s.wall_time).count()}};
}

void print_stats(std::ostream& out, const SearchStats& s) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "nodes %llu  depth %llu  memo hits %llu  branchings %llu  time %.3f ms\n",
                static_cast<unsigned long long>(s.nodes_expanded), static_cast<unsigned long long>(s.max_depth),
                static_cast<unsigned long long>(s.memo_hits), static_cast<unsigned long long>(s.branchings),
                std::chrono::duration<double, std::milli>(s.wall_time).count());
  out << buf;
}

std::string join(const std::vector<std::uint32_t>& xs, std::uint32_t offset) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(xs[i] + offset);
  }
  return s;
}

bool looks_like_graph(const std::string& path, const std::string& text) {
  for (const char* ext : {".col", ".gr", ".dimacs", ".graph"}) {
    const std::string e = ext;
    if (path.size() >= e.size() && path.compare(path.size() - e.size(), e.size(), e) == 0) return true;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    return line[pos] == 'p' || line[pos] == 'c' || line[pos] == 'e';
  }
  return false;
}

int cmd_solve(const Globals& g, const SolveArgs& a, std::ostream& out) {
  const std::string text = read_file(a.input);
  std::string format = a.format;
  if (format == "auto") format = looks_like_graph(a.input, text) ? "graph" : "setcover";

  SolverOptions options;
  options.memoize = a.memoize;
  options.include_first = a.include_first;
  options.node_limit = a.node_limit;
  options.memo_budget_bytes = a.memo_budget_mb << 20;

  json report;
  SearchStats stats;
  std::string label;
  std::vector<std::uint32_t> chosen;
  if (format == "graph") {
    const Graph graph = parse_graph(text);
    const auto result = solve_dominating_set(graph, options);
    chosen = result.nodes;
    stats = result.stats;
    label = "nodes";
  } else {
    const SetCoverInstance inst = parse_setcover(text);
    const auto result = a.memoize ? msc_memo(inst, options) : msc(inst, options);
    chosen = result.cover.chosen;
    stats = result.stats;
    label = "sets";
  }
  // Node ids and set line numbers are reported 1-based, like the inputs.
  if (g.json) {
    std::vector<std::uint32_t> shifted;
    for (auto x : chosen) shifted.push_back(x + 1);
    report = json{{"format", format}, {"size", chosen.size()}, {label, shifted}, {"stats", stats_json(stats)}};
    out << analysis::canonical_dump(report) << '\n';
    return kOk;
  }
  out << "size " << chosen.size() << '\n';
  if (!g.quiet) {
    out << label << ' ' << join(chosen, 1) << '\n';
    print_stats(out, stats);
  }
  return kOk;
}

analysis::OptimizerOptions optimizer_options(const Globals& g, std::size_t restarts = 20) {
  analysis::OptimizerOptions o;
  o.seed = g.seed;
  o.restarts = restarts;
  return o;
}

int cmd_analyze(const Globals& g, const AnalyzeArgs& a, std::ostream& out) {
  const auto& stage = analysis::find_stage(a.stage);
  const auto report = analysis::optimize(stage, optimizer_options(g, a.restarts));
  if (g.json) {
    out << analysis::canonical_dump(analysis::to_json(report)) << '\n';
  } else if (g.quiet) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f\n", report.alpha);
    out << buf;
  } else {
    analysis::print_report(out, report, a.tight);
  }
  return kOk;
}

int cmd_table(const Globals& g, const TableArgs& a, std::ostream& out, std::ostream& err) {
  const auto& registry = analysis::stage_registry();
  if (a.row > registry.size()) throw UsageError("--row must be between 1 and " + std::to_string(registry.size()));
  std::vector<analysis::AnalysisReport> reports;
  for (std::size_t i = 0; i < registry.size(); ++i) {
    if (a.row != 0 && i + 1 != a.row) continue;
    reports.push_back(analysis::optimize(registry[i], optimizer_options(g)));
    if (!reports.back().converged) err << "warning: stage " << registry[i].name << " did not converge\n";
  }
  if (g.json) {
    json rows = json::array();
    for (const auto& r : reports) rows.push_back(analysis::to_json(r));
    out << analysis::canonical_dump(rows) << '\n';
  } else {
    analysis::print_table(out, reports, a.tight);
  }
  return kOk;
}

int cmd_gen(const Globals& g, const GenArgs& a, std::ostream& out) {
  bool graph = a.graph;
  bool setcover = a.setcover;
  if (!graph && !setcover) {
    graph = a.n >= 0;
    setcover = a.d >= 0;
  }
  if (graph == setcover) throw UsageError("choose exactly one of --graph (with --n) or --setcover (with --d)");
  Rng rng(g.seed);
  std::string text;
  if (graph) {
    if (a.n < 1) throw UsageError("--n must be at least 1");
    if (!(a.p >= 0.0 && a.p <= 1.0)) throw UsageError("--p must lie in [0, 1]");
    text = format_graph(random_graph(static_cast<std::size_t>(a.n), a.p, rng));
  } else {
    if (a.d < 2) throw UsageError("--d must be at least 2");
    if (!(a.density > 0.0 && a.density <= 1.0)) throw UsageError("--density must lie in (0, 1]");
    text = format_setcover(random_setcover(static_cast<std::size_t>(a.d), a.density, rng));
  }
  if (a.output.empty()) {
    out << text;
  } else {
    std::ofstream file(a.output, std::ios::binary);
    if (!file) throw UsageError("cannot write " + a.output);
    file << text;
  }
  return kOk;
}

int cmd_verify(const Globals& g, const VerifyArgs& a, std::ostream& out) {
  std::size_t checked = 0;
  if (a.graphs) {
    if (a.n_max < 1 || a.n_max > 20) throw UsageError("--n-max must be between 1 and 20");
    const std::size_t count = a.count ? a.count : 300;
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t seed = g.seed + i;
      Rng rng(seed);
      const auto n = static_cast<std::size_t>(rng.between(1, a.n_max));
      const Graph graph = random_connected_graph(n, 0.1 + 0.5 * rng.unit(), rng);
      auto result = solve_dominating_set(graph, {});
      if (a.corrupt && !result.nodes.empty()) result.nodes.pop_back();
      const std::size_t expected = oracle::min_dominating_set_size(graph);
      if (result.nodes.size() != expected || !is_dominating_set(graph, result.nodes)) {
        out << "mismatch at instance " << i << " (seed " << seed << "): solver " << result.nodes.size()
            << ", oracle " << expected << '\n'
            << format_graph(graph);
        return kMismatch;
      }
      ++checked;
    }
  } else {
    if (a.d_max < 2 || a.d_max > 40) throw UsageError("--d-max must be between 2 and 40");
    const std::size_t count = a.count ? a.count : 500;
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t seed = g.seed + i;
      Rng rng(seed);
      const auto d = static_cast<std::size_t>(rng.between(2, a.d_max));
      const SetCoverInstance inst = random_setcover(d, 0.15 + 0.5 * rng.unit(), rng);
      auto result = msc(inst);
      if (a.corrupt && !result.cover.chosen.empty()) result.cover.chosen.pop_back();
      const std::size_t expected = oracle::min_set_cover_size(inst);
      if (result.cover.size() != expected || !is_cover(inst, result.cover.chosen)) {
        out << "mismatch at instance " << i << " (seed " << seed << "): solver " << result.cover.size()
            << ", oracle " << expected << '\n'
            << format_setcover(inst);
        return kMismatch;
      }
      ++checked;
    }
  }
  if (g.json) {
    out << analysis::canonical_dump(json{{"checked", checked}, {"mismatches", 0}}) << '\n';
  } else if (!g.quiet) {
    out << "verified " << checked << (a.graphs ? " graphs" : " set-cover instances") << ", 0 mismatches\n";
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact minimum set cover / dominating set solver and measure-and-conquer analyzer", "msc"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--quiet", g.quiet, "Print only the essential result");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve a set cover or dominating set instance exactly");
  s->add_option("input", solve.input, "Input file")->required();
  s->add_option("--format", solve.format, "setcover, graph or auto")
      ->check(CLI::IsMember({"auto", "setcover", "graph"}))
      ->capture_default_str();
  s->add_flag("--memoize", solve.memoize, "Cache solved subproblems");
  s->add_flag("--include-first", solve.include_first, "Explore the include branch first");
  s->add_option("--node-limit", solve.node_limit, "Abort after this many search nodes (0: none)");
  s->add_option("--memo-budget-mb", solve.memo_budget_mb, "Memo store budget in MiB")->capture_default_str();

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Optimise the measure weights of one design stage");
  an->add_option("--stage", analyze.stage, "Stage name")->required();
  an->add_flag("--tight", analyze.tight, "List the tight cases");
  an->add_option("--restarts", analyze.restarts, "Random restarts of the coarse search")->capture_default_str();

  TableArgs table;
  auto* t = app.add_subcommand("reproduce-table", "Optimise every design stage");
  t->add_option("--row", table.row, "Only this row (1-based)");
  t->add_flag("--tight", table.tight, "List the tight cases");

  GenArgs gen;
  auto* ge = app.add_subcommand("gen", "Generate a random instance");
  ge->add_flag("--graph", gen.graph, "Random graph G(n, p)");
  ge->add_flag("--setcover", gen.setcover, "Random set cover instance");
  ge->add_option("--n", gen.n, "Number of nodes");
  ge->add_option("--p", gen.p, "Edge probability")->capture_default_str();
  ge->add_option("--d", gen.d, "Dimension (sets + elements)");
  ge->add_option("--density", gen.density, "Membership probability")->capture_default_str();
  ge->add_option("-o,--output", gen.output, "Output file (default: stdout)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Compare the solver with brute force on random instances");
  v->add_option("--count", verify.count, "Number of instances");
  v->add_option("--d-max", verify.d_max, "Largest dimension")->capture_default_str();
  v->add_flag("--graphs", verify.graphs, "Check dominating sets on connected graphs");
  v->add_option("--n-max", verify.n_max, "Largest graph")->capture_default_str();
  v->add_flag("--corrupt", verify.corrupt, "Drop one chosen set before checking")->group("");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*s) return cmd_solve(g, solve, out);
    if (*an) return cmd_analyze(g, analyze, out);
    if (*t) return cmd_table(g, table, out, err);
    if (*ge) return cmd_gen(g, gen, out);
    if (*v) return cmd_verify(g, verify, out);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    print_stats(err, e.stats());
    return kResource;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace msc::cli
