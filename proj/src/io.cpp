#include "msc/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "msc/errors.hpp"

namespace msc {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line_no, std::uint64_t max) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value > max) {
    throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

SetCoverInstance parse_setcover(std::string_view text) {
  std::vector<std::vector<Element>> lists;
  auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    auto toks = tokens(lines[n]);
    if (toks.empty()) throw ParseError("line " + std::to_string(n + 1) + ": empty set");
    if (toks.front().front() == '#') continue;
    std::vector<Element> set;
    for (auto tok : toks) {
      set.push_back(static_cast<Element>(parse_uint(tok, n + 1, std::numeric_limits<Element>::max())));
    }
    lists.push_back(std::move(set));
  }
  if (lists.empty()) throw ParseError("no sets in input");
  return SetCoverInstance::from_lists(lists);
}

Graph parse_graph(std::string_view text) {
  Graph g;
  bool have_header = false;
  auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    auto toks = tokens(lines[n]);
    if (toks.empty() || toks[0] == "c") continue;
    const std::size_t line_no = n + 1;
    if (toks[0] == "p") {
      if (have_header) throw ParseError("line " + std::to_string(line_no) + ": second header");
      if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col")) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'p edge <n> <m>'");
      }
      g.n = parse_uint(toks[2], line_no, std::numeric_limits<Node>::max());
      parse_uint(toks[3], line_no, std::numeric_limits<std::uint64_t>::max());
      have_header = true;
    } else if (toks[0] == "e") {
      if (!have_header) throw ParseError("line " + std::to_string(line_no) + ": edge before header");
      if (toks.size() != 3) throw ParseError("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
      auto u = parse_uint(toks[1], line_no, g.n);
      auto v = parse_uint(toks[2], line_no, g.n);
      if (u == 0 || v == 0) throw ParseError("line " + std::to_string(line_no) + ": node ids are 1-based");
      g.edges.emplace_back(static_cast<Node>(u - 1), static_cast<Node>(v - 1));
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown line type '" + std::string(toks[0]) + "'");
    }
  }
  if (!have_header) throw ParseError("missing 'p edge' header");
  if (g.n == 0) throw ParseError("graph has no nodes");
  g.normalize();
  return g;
}

std::string format_setcover(const SetCoverInstance& inst) {
  std::ostringstream out;
  for (const auto& s : inst.sets()) {
    for (std::size_t i = 0; i < s.elements.size(); ++i) out << (i ? " " : "") << s.elements[i];
    out << '\n';
  }
  return out.str();
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.n << ' ' << g.edges.size() << '\n';
  for (auto [a, b] : g.edges) out << "e " << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace msc
