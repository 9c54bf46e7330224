#ifndef WELLCOVER_REPORT_HPP
#define WELLCOVER_REPORT_HPP

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wellcover/edge_ring.hpp"
#include "wellcover/enumerate.hpp"
#include "wellcover/errors.hpp"
#include "wellcover/generate.hpp"
#include "wellcover/graph.hpp"
#include "wellcover/io.hpp"
#include "wellcover/recognition.hpp"
#include "wellcover/scan.hpp"
#include "wellcover/version.hpp"

namespace wellcover {

// A flat ordered list of "key: value" lines. Keys may repeat; order is part
// of the document. All vertex labels in rendered values are 1-based.
struct ReportDocument {
  std::vector<std::pair<std::string, std::string>> entries;

  void add(std::string key, std::string value) {
    entries.emplace_back(std::move(key), std::move(value));
  }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  void add(std::string key, bool value) { add(std::move(key), value ? "true" : "false"); }
  void add(std::string key, std::int64_t value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, std::uint64_t value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, int value) { add(std::move(key), std::to_string(value)); }

  std::optional<std::string> get(const std::string& key) const {
    for (const auto& [k, v] : entries)
      if (k == key) return v;
    return std::nullopt;
  }

  std::string require(const std::string& key) const {
    if (auto v = get(key)) return *v;
    throw ParseError("report is missing the '" + key + "' entry");
  }

  std::vector<std::string> all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries)
      if (k == key) out.push_back(v);
    return out;
  }

  std::string render() const {
    std::ostringstream out;
    for (const auto& [k, v] : entries) out << k << ": " << v << '\n';
    return out.str();
  }

  static ReportDocument parse(const std::string& text) {
    ReportDocument doc;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const auto sep = line.find(": ");
      if (sep == std::string::npos || sep == 0)
        throw ParseError("malformed report line '" + line + "'");
      doc.add(line.substr(0, sep), line.substr(sep + 2));
    }
    if (doc.entries.empty() || doc.entries.front() != std::pair<std::string, std::string>{
                                                          "format", "wellcover-report/1"})
      throw ParseError("not a wellcover report document");
    return doc;
  }
};

// ---------------------------------------------------------------------------
// Rendering and parsing of values (1-based labels).

inline std::string render_vertex_set(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ',';
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

inline std::string render_parts(const std::vector<VertexSet>& parts) {
  std::string out;
  for (const VertexSet& p : parts) {
    if (!out.empty()) out += " | ";
    out += render_vertex_set(p);
  }
  return out;
}

inline std::string render_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::string out;
  for (auto [u, v] : pairs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(u + 1) + "-" + std::to_string(v + 1);
  }
  return out;
}

inline VertexSet parse_vertex_set_render(const std::string& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw ParseError("malformed vertex set '" + text + "'");
  VertexSet s;
  std::string inner = text.substr(1, text.size() - 2);
  if (inner.empty()) return s;
  std::istringstream in(inner);
  std::string token;
  while (std::getline(in, token, ',')) s.add(detail::parse_label(token) - 1);
  return s;
}

inline std::vector<VertexSet> parse_parts_render(const std::string& text) {
  std::vector<VertexSet> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto next = text.find(" | ", pos);
    if (next == std::string::npos) next = text.size();
    parts.push_back(parse_vertex_set_render(text.substr(pos, next - pos)));
    pos = next == text.size() ? next : next + 3;
  }
  if (parts.empty()) throw ParseError("empty partition rendering");
  return parts;
}

// Command-line cover flags use the compact form "1,5,6;2,3,4".
inline std::vector<VertexSet> parse_cover_flag(const std::string& text) {
  std::vector<VertexSet> parts;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) {
    VertexSet s;
    std::istringstream fields(part);
    std::string token;
    while (std::getline(fields, token, ',')) s.add(detail::parse_label(token) - 1);
    if (s.empty()) throw ParseError("empty part in cover flag '" + text + "'");
    parts.push_back(s);
  }
  if (parts.empty()) throw ParseError("empty cover flag");
  return parts;
}

// ---------------------------------------------------------------------------
// Builders. Each builder computes its verdicts from the inputs embedded in
// the document header, so a report can be regenerated from itself.

namespace detail {

inline ReportDocument report_head(const std::string& command) {
  ReportDocument d;
  d.add("format", "wellcover-report/1");
  d.add("tool", std::string(kToolName));
  d.add("tool-version", std::string(kToolVersion));
  d.add("command", command);
  return d;
}

inline void add_graph_entries(ReportDocument& d, const GraphDocument& doc) {
  d.add("graph-name", doc.name);
  d.add("graph-format", doc.format);
  d.add("graph-n", doc.graph.n());
  d.add("graph-edges", static_cast<std::int64_t>(doc.graph.edge_count()));
  d.add("graph6", serialize_graph6(doc.graph));
}

inline GraphDocument graph_from_report(const ReportDocument& d) {
  return GraphDocument{parse_graph6(d.require("graph6")), d.require("graph-name"),
                       d.require("graph-format")};
}

}  // namespace detail

inline ReportDocument make_check_report(const GraphDocument& doc, SearchBudget* budget = nullptr) {
  ReportDocument d = detail::report_head("check");
  detail::add_graph_entries(d, doc);
  const Graph& g = doc.graph;

  const MisReport mis = enumerate_maximal_independent_sets(g, budget);
  d.add("independence-number", mis.max_size);
  d.add("mis-count", static_cast<std::uint64_t>(mis.sets.size()));
  for (const VertexSet& m : mis.sets) d.add("mis", render_vertex_set(m));

  const Certificate wc = is_well_covered(g, mis);
  d.add("well-covered", certificate_holds(wc));
  if (const auto* not_wc = std::get_if<NotWellCovered>(&wc)) {
    d.add("witness-small", render_vertex_set(not_wc->witness_small));
    d.add("witness-large", render_vertex_set(not_wc->witness_large));
  }

  const Certificate uniform = is_uniformly_well_covered(g, budget);
  d.add("uniformly-well-covered", certificate_holds(uniform));
  if (const auto* u = std::get_if<UniformlyWellCovered>(&uniform)) {
    d.add("partition", render_parts(u->partition.parts));
  } else if (const auto* nu = std::get_if<NotUniform>(&uniform)) {
    if (nu->reason == NotUniform::Reason::kNoCoverExists) {
      d.add("not-uniform-reason", "no-cover");
    } else {
      d.add("not-uniform-reason", "dominated-part");
      d.add("examined-cover", render_parts(nu->cover->parts));
      d.add("dominated-part", render_vertex_set(
                                  nu->cover->parts[static_cast<std::size_t>(nu->clique_index)]));
      d.add("dominating-set", render_vertex_set(nu->witness));
    }
  }
  return d;
}

inline ReportDocument make_certify_report(const GraphDocument& doc, const std::string& route,
                                          SearchBudget* budget = nullptr) {
  if (route != "oracle" && route != "corollary3" && route != "algebraic" && route != "all")
    throw ParseError("unknown certify route '" + route + "'");
  ReportDocument d = detail::report_head("certify");
  detail::add_graph_entries(d, doc);
  d.add("route", route);
  const Graph& g = doc.graph;

  const MisReport mis = enumerate_maximal_independent_sets(g, budget);
  d.add("independence-number", mis.max_size);
  const std::vector<CliqueCover> covers = find_clique_covers(g, mis.max_size, budget);
  d.add("covers-found", static_cast<std::uint64_t>(covers.size()));
  for (std::size_t j = 0; j < covers.size(); ++j)
    d.add("cover-" + std::to_string(j + 1), render_parts(covers[j].parts));

  std::vector<std::pair<std::string, bool>> verdicts;
  std::string inconsistency;

  if (route == "oracle" || route == "all") {
    const bool uniform = certificate_holds(is_uniformly_well_covered(g, budget));
    d.add("well-covered-oracle", mis.min_size == mis.max_size);
    d.add("uniform-oracle", uniform);
    verdicts.emplace_back("oracle", uniform);
  }
  if (route == "corollary3" || route == "all") {
    bool uniform = false;
    std::optional<bool> shared;
    for (std::size_t j = 0; j < covers.size(); ++j) {
      bool domination_free = true;
      for (const VertexSet& part : covers[j].parts)
        if (has_independent_dominating_set_outside(g, part, budget)) {
          domination_free = false;
          break;
        }
      d.add("cover-" + std::to_string(j + 1) + "-domination-free", domination_free);
      if (!shared) shared = domination_free;
      if (*shared != domination_free) inconsistency = "per-cover domination verdicts differ";
      uniform |= domination_free;
    }
    d.add("uniform-cover-criterion", uniform);
    verdicts.emplace_back("cover-criterion", uniform);
  }
  if (route == "algebraic" || route == "all") {
    const MonomialIdeal ideal = edge_ideal(g);
    bool uniform = false;
    std::optional<bool> shared;
    for (std::size_t j = 0; j < covers.size(); ++j) {
      bool all_regular = true;
      for (int i = 0; i < covers[j].size(); ++i)
        if (linear_zero_divisor_witness(theta(g, covers[j], i), ideal, budget)) {
          all_regular = false;
          break;
        }
      d.add("cover-" + std::to_string(j + 1) + "-all-regular", all_regular);
      if (!shared) shared = all_regular;
      if (*shared != all_regular) inconsistency = "per-cover regularity verdicts differ";
      uniform |= all_regular;
    }
    d.add("uniform-quotient-ring", uniform);
    verdicts.emplace_back("quotient-ring", uniform);
  }

  bool agree = inconsistency.empty();
  for (const auto& [name, verdict] : verdicts) agree &= (verdict == verdicts.front().second);
  d.add("routes-agree", agree);
  if (!agree) {
    std::string detail_text = inconsistency;
    for (const auto& [name, verdict] : verdicts) {
      if (!detail_text.empty()) detail_text += ", ";
      detail_text += name + "=" + (verdict ? "true" : "false");
    }
    d.add("disagreement", detail_text);
  }
  return d;
}

inline ReportDocument make_algebra_report(const GraphDocument& doc,
                                          const std::vector<VertexSet>& cover_parts,
                                          SearchBudget* budget = nullptr) {
  ReportDocument d = detail::report_head("algebra");
  detail::add_graph_entries(d, doc);
  const CliqueCover cover{cover_parts};
  const ThetaRegularityReport rep = check_theta_regularity(doc.graph, cover, budget);
  d.add("cover", render_parts(cover.parts));
  d.add("well-covered", rep.well_covered);
  for (int i = 0; i < rep.s; ++i) {
    const std::string tag = std::to_string(i + 1);
    d.add("theta-" + tag, theta(doc.graph, cover, i).str());
    if (rep.witnesses[static_cast<std::size_t>(i)]) {
      d.add("witness-" + tag,
            rep.witnesses[static_cast<std::size_t>(i)]->general(doc.graph.n()).str());
    } else {
      d.add("witness-" + tag, "none");
    }
  }
  d.add("all-regular", rep.all_regular);
  return d;
}

inline ReportDocument make_bipartite_report(const GraphDocument& doc) {
  ReportDocument d = detail::report_head("bipartite");
  detail::add_graph_entries(d, doc);
  const BipartiteWellcoverReport rep = check_bipartite_wellcover(doc.graph);
  d.add("applicable", rep.applicable);
  if (!rep.applicable) {
    d.add("inapplicable-reason", rep.inapplicable_reason);
    return d;
  }
  d.add("left", render_vertex_set(rep.left));
  d.add("right", render_vertex_set(rep.right));
  d.add("perfect-matching", rep.perfect_matching);
  if (rep.perfect_matching) d.add("matching", render_pairs(rep.matching));
  d.add("well-covered", rep.well_covered);
  if (rep.offending) {
    d.add("offending-edge", render_pairs({{(*rep.offending)[0], (*rep.offending)[1]}}));
    d.add("offending-pair", render_pairs({{(*rep.offending)[2], (*rep.offending)[3]}}));
  }
  return d;
}

namespace detail {

inline std::string render_mode(GeneratorConfig::Mode mode) {
  switch (mode) {
    case GeneratorConfig::Mode::kExhaustiveLabeled: return "exhaustive-labeled";
    case GeneratorConfig::Mode::kRandomSpartite: return "random-spartite";
    case GeneratorConfig::Mode::kRandomGnp: return "random-gnp";
  }
  return "";
}

inline GeneratorConfig::Mode parse_mode(const std::string& text) {
  if (text == "exhaustive-labeled") return GeneratorConfig::Mode::kExhaustiveLabeled;
  if (text == "random-spartite") return GeneratorConfig::Mode::kRandomSpartite;
  if (text == "random-gnp") return GeneratorConfig::Mode::kRandomGnp;
  throw ParseError("unknown generator mode '" + text + "'");
}

inline std::string render_part_sizes(const std::vector<int>& sizes) {
  std::string out;
  for (int s : sizes) {
    if (!out.empty()) out += ',';
    out += std::to_string(s);
  }
  return out;
}

inline std::vector<int> parse_part_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) sizes.push_back(parse_label(token));
  if (sizes.empty()) throw ParseError("empty part-size list");
  return sizes;
}

inline void add_config_entries(ReportDocument& d, const GeneratorConfig& config) {
  d.add("mode", render_mode(config.mode));
  d.add("n", config.n);
  if (!config.part_sizes.empty()) d.add("parts", render_part_sizes(config.part_sizes));
  if (config.mode != GeneratorConfig::Mode::kExhaustiveLabeled) {
    std::ostringstream p;
    p << std::setprecision(17) << config.edge_probability;
    d.add("edge-probability", p.str());
    d.add("seed", config.seed);
  }
  d.add("count", config.count);
  d.add("timeout-secs", config.timeout_secs);
}

inline GeneratorConfig config_from_report(const ReportDocument& d) {
  GeneratorConfig config;
  config.mode = parse_mode(d.require("mode"));
  config.n = parse_label(d.require("n"));
  if (auto parts = d.get("parts")) config.part_sizes = parse_part_sizes(*parts);
  if (config.mode != GeneratorConfig::Mode::kExhaustiveLabeled) {
    try {
      config.edge_probability = std::stod(d.require("edge-probability"));
      config.seed = std::stoull(d.require("seed"));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("malformed generator configuration");
    }
  }
  try {
    config.count = std::stoull(d.require("count"));
    config.timeout_secs = std::stoi(d.require("timeout-secs"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed generator configuration");
  }
  return config;
}

}  // namespace detail

inline ReportDocument make_scan_report(const ScanReport& scan) {
  ReportDocument d = detail::report_head(scan.kind == "conjecture" ? "conjecture" : "scan");
  d.add("kind", scan.kind);
  detail::add_config_entries(d, scan.config);
  d.add("instances-examined", scan.instances_examined);
  d.add("instances-qualifying", scan.instances_qualifying);
  if (scan.qualifying_partition_count)
    d.add("qualifying-partition-pairs", *scan.qualifying_partition_count);
  d.add("timeouts", scan.timeouts);
  for (const PropertyTally& t : scan.tallies)
    d.add("tally",
          t.name + " " + std::to_string(t.applicable) + " " + std::to_string(t.passed));
  d.add("counterexamples", static_cast<std::uint64_t>(scan.counterexamples.size()));
  for (const ScanRecord& r : scan.counterexamples) {
    d.add("counterexample-index", r.index);
    d.add("counterexample-graph6", serialize_graph6(r.graph));
    if (r.partition) d.add("counterexample-partition", render_parts(r.partition->parts));
    d.add("counterexample-detail", r.detail);
  }
  d.add("wall-ms", scan.wall_ms);
  return d;
}

// ---------------------------------------------------------------------------
// Verification: a report re-verifies when (a) the computation regenerated
// from the embedded inputs matches it on every non-timing entry, and (b) the
// witnesses it claims check out against the definitions directly.

struct VerifyResult {
  bool ok = true;
  std::string message = "verified";
};

namespace detail {

inline bool volatile_key(const std::string& key) { return key == "wall-ms"; }

inline std::optional<std::string> diff_documents(const ReportDocument& got,
                                                 const ReportDocument& expected) {
  std::vector<std::pair<std::string, std::string>> a, b;
  for (const auto& e : got.entries)
    if (!volatile_key(e.first)) a.push_back(e);
  for (const auto& e : expected.entries)
    if (!volatile_key(e.first)) b.push_back(e);
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i])
      return "entry " + std::to_string(i + 1) + ": document has '" + a[i].first + ": " +
             a[i].second + "', regeneration produced '" + b[i].first + ": " + b[i].second + "'";
  if (a.size() != b.size()) return "documents have different entry counts";
  return std::nullopt;
}

// Direct definitional spot-checks of the witnesses in a check report.
inline std::optional<std::string> check_witnesses(const ReportDocument& d, const Graph& g) {
  for (const std::string& text : d.all("mis"))
    if (!is_maximal_independent_set(g, parse_vertex_set_render(text)))
      return "claimed maximal independent set " + text + " is not one";
  if (d.get("witness-small")) {
    const VertexSet small = parse_vertex_set_render(d.require("witness-small"));
    const VertexSet large = parse_vertex_set_render(d.require("witness-large"));
    if (!is_maximal_independent_set(g, small) || !is_maximal_independent_set(g, large) ||
        small.count() >= large.count())
      return "well-coveredness witnesses do not certify different sizes";
  }
  if (auto partition = d.get("partition")) {
    const CliqueCover cover{parse_parts_render(*partition)};
    if (auto violation = clique_cover_violation(g, cover))
      return "claimed partition is invalid: " + *violation;
  }
  if (auto dominating = d.get("dominating-set")) {
    const VertexSet a = parse_vertex_set_render(*dominating);
    const VertexSet part = parse_vertex_set_render(d.require("dominated-part"));
    if (!is_independent(g, a) || a.intersects(part) || !dominates(g, a, part))
      return "claimed dominating witness does not dominate the part";
  }
  return std::nullopt;
}

inline std::optional<std::string> check_scan_counterexamples(const ReportDocument& d) {
  const auto graphs = d.all("counterexample-graph6");
  const auto details = d.all("counterexample-detail");
  if (graphs.size() != details.size()) return std::string("ragged counterexample records");
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph g = parse_graph6(graphs[i]);
    if (details[i].find("partite matching") != std::string::npos) continue;  // checked via regeneration
    if (certificate_holds(is_uniformly_well_covered(g)))
      return "recorded counterexample " + graphs[i] + " re-verifies as uniformly well covered";
  }
  return std::nullopt;
}

}  // namespace detail

inline VerifyResult verify_report(const std::string& text) {
  const ReportDocument d = ReportDocument::parse(text);
  const std::string command = d.require("command");

  ReportDocument regenerated;
  if (command == "check" || command == "certify" || command == "algebra" ||
      command == "bipartite") {
    const GraphDocument doc = detail::graph_from_report(d);
    if (command == "check") {
      regenerated = make_check_report(doc);
      if (auto bad = detail::check_witnesses(d, doc.graph)) return {false, *bad};
    } else if (command == "certify") {
      regenerated = make_certify_report(doc, d.require("route"));
    } else if (command == "algebra") {
      regenerated = make_algebra_report(doc, parse_parts_render(d.require("cover")));
    } else {
      regenerated = make_bipartite_report(doc);
    }
  } else if (command == "conjecture" || command == "scan") {
    const GeneratorConfig config = detail::config_from_report(d);
    const std::string kind = d.require("kind");
    ScanReport scan;
    if (kind == "conjecture")
      scan = conjecture_scan(config);
    else if (kind == "corpus-cross-check")
      scan = corpus_cross_check(config);
    else if (kind == "bipartite-cross-check")
      scan = bipartite_cross_check(config);
    else
      throw ParseError("unknown scan kind '" + kind + "'");
    regenerated = make_scan_report(scan);
    if (auto bad = detail::check_scan_counterexamples(d)) return {false, *bad};
  } else {
    throw ParseError("unknown report command '" + command + "'");
  }

  if (auto diff = detail::diff_documents(d, regenerated)) return {false, *diff};
  return VerifyResult{};
}

}  // namespace wellcover

#endif
