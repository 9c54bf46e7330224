#ifndef WELLCOVER_IO_HPP
#define WELLCOVER_IO_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wellcover/errors.hpp"
#include "wellcover/graph.hpp"

namespace wellcover {

// ---------------------------------------------------------------------------
// Edge-list format: lines "u v" with 1-based labels, '#' comments, blank
// lines ignored, optional header "n <count>" declaring the vertex count
// (otherwise the largest label decides).

namespace detail {

inline int parse_label(const std::string& token) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(token, &pos);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + token + "'");
  }
  if (pos != token.size()) throw ParseError("not an integer: '" + token + "'");
  if (value < 1) throw ParseError("vertex labels start at 1, got '" + token + "'");
  if (value > 64) throw ParseError("vertex label above 64: '" + token + "'");
  return value;
}

}  // namespace detail

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int declared_n = 0;
  bool first_significant = true;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;  // blank line
    if (!(fields >> b)) throw ParseError("expected two tokens per line, got '" + line + "'");
    if (fields >> extra) throw ParseError("trailing tokens on line '" + line + "'");
    if (first_significant && a == "n") {
      declared_n = detail::parse_label(b);
      first_significant = false;
      continue;
    }
    first_significant = false;
    const int u = detail::parse_label(a);
    const int v = detail::parse_label(b);
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u));
    if (declared_n > 0 && (u > declared_n || v > declared_n))
      throw ParseError("label exceeds the declared vertex count");
    edges.emplace_back(u - 1, v - 1);
  }
  int n = declared_n;
  for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
  if (n == 0) throw ParseError("empty graph document");
  Graph g(n);
  for (auto [u, v] : edges)
    if (!g.has_edge(u, v)) g.add_edge(u, v);
  return g;
}

inline std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n() << '\n';
  for (auto [u, v] : g.edges()) out << (u + 1) << ' ' << (v + 1) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// graph6 format: one printable line; byte n+63 for n <= 62 (or '~' and three
// bytes of 18-bit big-endian n for larger graphs), then the upper triangle
// of the adjacency matrix read column by column, packed big-endian into
// 6-bit groups, each offset by 63. Zero bits pad the final group.

inline Graph parse_graph6(const std::string& text_in) {
  std::string_view text(text_in);
  if (constexpr std::string_view kHeader = ">>graph6<<"; text.substr(0, kHeader.size()) == kHeader)
    text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 document");
  for (char ch : text)
    if (ch < 63 || ch > 126) throw ParseError("byte outside the printable graph6 range");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] == '~') {
    if (text.size() < 4) throw ParseError("truncated graph6 vertex count");
    if (text[1] == '~') throw ParseError("graph6 vertex counts above 258047 are not supported");
    n = (static_cast<long>(text[1] - 63) << 12) | (static_cast<long>(text[2] - 63) << 6) |
        static_cast<long>(text[3] - 63);
    if (n < 63) throw ParseError("non-canonical long-form graph6 vertex count");
    pos = 4;
  } else {
    n = text[0] - 63;
    pos = 1;
  }
  if (n < 1) throw ParseError("graph6 document with no vertices");
  if (n > 64) throw LimitError("graph6 document with more than 64 vertices");

  const std::size_t bits = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() - pos != groups) throw ParseError("graph6 body has the wrong length");

  Graph g(static_cast<int>(n));
  const auto pairs = vertex_pairs(static_cast<int>(n));
  for (std::size_t b = 0; b < groups * 6; ++b) {
    const int bit = (text[pos + b / 6] - 63) >> (5 - b % 6) & 1;
    if (b < bits) {
      if (bit) g.add_edge(pairs[b].first, pairs[b].second);
    } else if (bit) {
      throw ParseError("nonzero padding bits in graph6 body");
    }
  }
  return g;
}

inline std::string serialize_graph6(const Graph& g) {
  std::string out;
  if (g.n() <= 62) {
    out.push_back(static_cast<char>(g.n() + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>((g.n() >> 12 & 63) + 63));
    out.push_back(static_cast<char>((g.n() >> 6 & 63) + 63));
    out.push_back(static_cast<char>((g.n() & 63) + 63));
  }
  const auto pairs = vertex_pairs(g.n());
  int group = 0, filled = 0;
  for (auto [u, v] : pairs) {
    group = group << 1 | (g.has_edge(u, v) ? 1 : 0);
    if (++filled == 6) {
      out.push_back(static_cast<char>(group + 63));
      group = 0;
      filled = 0;
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

// ---------------------------------------------------------------------------
// DIMACS format: "c" comment lines, one "p edge <n> <m>" program line, then
// "e <u> <v>" edge lines with 1-based labels.

inline Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  long declared_edges = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n > 0) throw ParseError("repeated program line");
      std::string kind;
      if (!(fields >> kind) || kind != "edge") throw ParseError("expected 'p edge <n> <m>'");
      std::string ns, ms;
      if (!(fields >> ns >> ms)) throw ParseError("expected 'p edge <n> <m>'");
      n = detail::parse_label(ns);
      try {
        declared_edges = std::stol(ms);
      } catch (const std::exception&) {
        throw ParseError("not an integer: '" + ms + "'");
      }
      if (declared_edges < 0) throw ParseError("negative edge count");
      continue;
    }
    if (tag == "e") {
      if (n == 0) throw ParseError("edge line before the program line");
      std::string a, b;
      if (!(fields >> a >> b)) throw ParseError("expected 'e <u> <v>'");
      const int u = detail::parse_label(a);
      const int v = detail::parse_label(b);
      if (u == v) throw ParseError("loop at vertex " + std::to_string(u));
      if (u > n || v > n) throw ParseError("label exceeds the declared vertex count");
      edges.emplace_back(u - 1, v - 1);
      continue;
    }
    throw ParseError("unrecognized line tag '" + tag + "'");
  }
  if (n == 0) throw ParseError("missing program line");
  Graph g(n);
  for (auto [u, v] : edges)
    if (!g.has_edge(u, v)) g.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------

struct GraphDocument {
  Graph graph;
  std::string name;    // file stem or free text
  std::string format;  // edge-list | graph6 | dimacs
};

inline Graph parse_graph(const std::string& text, const std::string& format) {
  if (format == "edge-list") return parse_edge_list(text);
  if (format == "graph6") return parse_graph6(text);
  if (format == "dimacs") return parse_dimacs(text);
  throw ParseError("unknown graph format '" + format + "'");
}

inline GraphDocument load_graph_file(const std::string& path,
                                     const std::string& format = "edge-list") {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string name = path;
  if (const auto slash = name.find_last_of('/'); slash != std::string::npos)
    name = name.substr(slash + 1);
  if (const auto dot = name.find_last_of('.'); dot != std::string::npos && dot > 0)
    name = name.substr(0, dot);
  return GraphDocument{parse_graph(buffer.str(), format), name, format};
}

}  // namespace wellcover

#endif
