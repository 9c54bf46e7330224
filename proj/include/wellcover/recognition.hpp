#ifndef WELLCOVER_RECOGNITION_HPP
#define WELLCOVER_RECOGNITION_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wellcover/domination_search.hpp"
#include "wellcover/enumerate.hpp"
#include "wellcover/graph.hpp"

namespace wellcover {

// Outcome of evaluating a list of conditions that some recognition criterion
// asserts to be equivalent. `conditions` keeps a fixed, documented order.
struct EquivalenceReport {
  bool applicable = true;
  std::string note;  // reason when not applicable
  int s = 0;
  std::vector<std::pair<std::string, bool>> conditions;
  bool agree = true;
  std::string disagreement;

  void finish() {
    agree = true;
    disagreement.clear();
    for (const auto& [name, verdict] : conditions)
      if (verdict != conditions.front().second) agree = false;
    if (!agree) {
      for (const auto& [name, verdict] : conditions) {
        if (!disagreement.empty()) disagreement += ", ";
        disagreement += name + "=" + (verdict ? "true" : "false");
      }
    }
  }
};

// Given a partition of the vertices into s disjoint maximal cliques whose
// size matches some maximal independent set, the following are equivalent:
// the graph is well covered; it is uniformly well covered; no part of the
// cover is dominated by an independent set disjoint from it. All three are
// evaluated independently and reported.
inline EquivalenceReport check_cover_criterion(const Graph& g, const CliqueCover& cover,
                                               SearchBudget* budget = nullptr) {
  validate_clique_cover(g, cover);
  const MisReport mis = enumerate_maximal_independent_sets(g, budget);
  const int s = cover.size();
  bool s_matches = false;
  for (const VertexSet& m : mis.sets) s_matches |= (m.count() == s);
  if (!s_matches)
    throw std::invalid_argument("cover size matches no maximal independent set size");

  EquivalenceReport rep;
  rep.s = s;
  const bool well_covered = (mis.min_size == mis.max_size);
  const bool uniform = certificate_holds(is_uniformly_well_covered(g, budget));
  bool domination_free = true;
  for (const VertexSet& part : cover.parts)
    if (has_independent_dominating_set_outside(g, part, budget)) {
      domination_free = false;
      break;
    }
  rep.conditions = {{"well-covered", well_covered},
                    {"uniformly-well-covered", uniform},
                    {"cover-domination-free", domination_free}};
  rep.finish();
  return rep;
}

// Given a partition of the vertices into s cliques (equivalently, a proper
// s-coloring of the complement), evaluates three conditions: every part is a
// minimal dominating set of the complement and every minimal dominating set
// of the graph has size s; the graph is uniformly well covered; the graph is
// well covered with a maximal independent set of size s.  The first
// condition implies the other two, and the third implies the second; the
// converses can fail.  A uniformly well covered graph that is not well
// dominated (two triangles joined by a perfect matching) satisfies the last
// two conditions at s = alpha while an off-size minimal dominating set
// defeats the first, and any clique partition with s != alpha keeps
// uniformity while both size-pinned conditions fail.  The report carries all
// three verdicts and whether they coincide.
inline EquivalenceReport check_complement_partition_criterion(const Graph& g, const Partition& p,
                                                              int max_brute_n = 16,
                                                              SearchBudget* budget = nullptr) {
  if (!is_partition_of_vertices(g, p))
    throw std::invalid_argument("not a partition of the vertex set");
  for (const VertexSet& part : p.parts)
    if (!is_clique(g, part)) throw std::invalid_argument("partition part is not a clique");

  const int s = p.size();
  const Graph comp = g.complement();
  bool parts_minimal_dominating = true;
  for (const VertexSet& part : p.parts)
    parts_minimal_dominating &= is_minimal_dominating_set(comp, part);
  bool all_minimal_dominating_size_s = true;
  for (const VertexSet& d : enumerate_minimal_dominating_sets(g, max_brute_n))
    all_minimal_dominating_size_s &= (d.count() == s);

  const MisReport mis = enumerate_maximal_independent_sets(g, budget);
  const bool uniform = certificate_holds(is_uniformly_well_covered(g, budget));
  const bool well_covered_at_s = (mis.min_size == mis.max_size && mis.max_size == s);

  EquivalenceReport rep;
  rep.s = s;
  rep.conditions = {
      {"complement-partition-domination", parts_minimal_dominating && all_minimal_dominating_size_s},
      {"uniformly-well-covered", uniform},
      {"well-covered-at-s", well_covered_at_s}};
  rep.finish();
  return rep;
}

// Four recognition conditions evaluated at s equal to the independence
// number (the only size at which a partition into disjoint maximal cliques
// can exist, since any independent set meets each part at most once).
// Conditions, in order: well covered with such a cover; such a cover exists
// and the graph is well dominated with domination number s; some cover has
// no part dominated by an independent set disjoint from it; uniformly well
// covered.  The first, third and fourth conditions are equivalent, and the
// second implies them, but the second is strictly stronger: a uniformly
// well covered graph need not be well dominated (two triangles joined by a
// perfect matching have domination number 2 yet each triangle is a minimal
// dominating set of size 3).  When no cover exists all four conditions are
// false.
inline EquivalenceReport check_equivalence_suite(const Graph& g, int max_brute_n = 16,
                                                 SearchBudget* budget = nullptr) {
  const MisReport mis = enumerate_maximal_independent_sets(g, budget);
  const int alpha = mis.max_size;
  EquivalenceReport rep;
  rep.s = alpha;
  if (g.n() > max_brute_n) {
    rep.applicable = false;
    rep.note = "vertex count above the brute-force domination gate";
    return rep;
  }
  const std::vector<CliqueCover> covers = find_clique_covers(g, alpha, budget);
  const bool has_cover = !covers.empty();
  const bool well_covered = (mis.min_size == mis.max_size);
  const bool well_dominated_at_s =
      has_cover && is_well_dominated(g, max_brute_n) && domination_number(g, max_brute_n) == alpha;
  bool some_cover_domination_free = false;
  for (const CliqueCover& cover : covers) {
    bool ok = true;
    for (const VertexSet& part : cover.parts)
      if (has_independent_dominating_set_outside(g, part, budget)) {
        ok = false;
        break;
      }
    if (ok) {
      some_cover_domination_free = true;
      break;
    }
  }
  const bool uniform = certificate_holds(is_uniformly_well_covered(g, budget));
  rep.conditions = {{"well-covered-with-cover", well_covered && has_cover},
                    {"partite-domination-at-s", well_dominated_at_s},
                    {"cover-domination-free", some_cover_domination_free},
                    {"uniformly-well-covered", uniform}};
  rep.finish();
  return rep;
}

// ---------------------------------------------------------------------------
// Bipartite matching (augmenting paths), deterministic: left vertices are
// processed ascending and neighbours tried ascending.

struct MatchingCertificate {
  int left_part = 0;
  int right_part = 1;
  std::vector<std::pair<int, int>> pairs;  // sorted by left vertex
};

inline std::optional<MatchingCertificate> bipartite_matching(const Graph& g, VertexSet left,
                                                             VertexSet right) {
  g.check_subset(left);
  g.check_subset(right);
  if (left.intersects(right)) throw std::invalid_argument("matching sides overlap");
  if (left.count() != right.count()) return std::nullopt;

  std::array<int, 64> match_of{};
  match_of.fill(-1);
  auto augment = [&](auto&& self, int u, VertexSet& seen) -> bool {
    for (int w : g.neighbors(u) & right) {
      if (seen.contains(w)) continue;
      seen.add(w);
      if (match_of[static_cast<std::size_t>(w)] == -1 ||
          self(self, match_of[static_cast<std::size_t>(w)], seen)) {
        match_of[static_cast<std::size_t>(w)] = u;
        return true;
      }
    }
    return false;
  };
  for (int u : left) {
    VertexSet seen;
    if (!augment(augment, u, seen)) return std::nullopt;
  }
  MatchingCertificate cert;
  for (int w : right) cert.pairs.emplace_back(match_of[static_cast<std::size_t>(w)], w);
  std::sort(cert.pairs.begin(), cert.pairs.end());
  return cert;
}

// ---------------------------------------------------------------------------
// Matching structure of s-partite well-covered graphs whose maximal cliques
// all have size s: the parts must have equal size and every pair of parts
// must be joined by a perfect matching.

struct PartiteMatchingReport {
  bool applicable = false;
  std::string inapplicable_reason;
  int s = 0;
  std::vector<int> part_sizes;
  bool sizes_equal = false;
  std::vector<MatchingCertificate> matchings;  // pairs (i, j) with i < j, lexicographic
  bool all_pairs_matched = false;
  bool ok = false;  // sizes_equal and all pairs matched
};

inline PartiteMatchingReport check_partite_matching_structure(const Graph& g, const Partition& p,
                                                              SearchBudget* budget = nullptr) {
  PartiteMatchingReport rep;
  rep.s = p.size();
  if (!is_partition_into_independent_sets(g, p)) {
    rep.inapplicable_reason = "not a partition into independent sets";
    return rep;
  }
  for (const VertexSet& c : enumerate_maximal_cliques(g, budget))
    if (c.count() != rep.s) {
      rep.inapplicable_reason = "maximal clique of a different size";
      return rep;
    }
  const MisReport mis = enumerate_maximal_independent_sets(g, budget);
  if (mis.min_size != mis.max_size) {
    rep.inapplicable_reason = "not well covered";
    return rep;
  }
  rep.applicable = true;
  for (const VertexSet& part : p.parts) rep.part_sizes.push_back(part.count());
  rep.sizes_equal = true;
  for (int sz : rep.part_sizes) rep.sizes_equal &= (sz == rep.part_sizes.front());
  rep.all_pairs_matched = true;
  for (int i = 0; i < rep.s; ++i)
    for (int j = i + 1; j < rep.s; ++j) {
      auto m = bipartite_matching(g, p.parts[static_cast<std::size_t>(i)],
                                  p.parts[static_cast<std::size_t>(j)]);
      if (m) {
        m->left_part = i;
        m->right_part = j;
        rep.matchings.push_back(*m);
      } else {
        rep.all_pairs_matched = false;
      }
    }
  rep.ok = rep.sizes_equal && rep.all_pairs_matched;
  return rep;
}

// ---------------------------------------------------------------------------
// Bipartite well-coveredness criterion: a bipartite graph without isolated
// vertices is well covered exactly when it has a perfect matching such that
// the closed neighbourhood of each matched pair induces a complete bipartite
// graph. The condition does not depend on which perfect matching is used
// (each perfect matching is a cover by disjoint maximal cliques — a common
// neighbour of both endpoints would violate two-colorability — and the
// cover criterion applies to every such cover alike), so the first maximum
// matching found is checked.

struct BipartiteWellcoverReport {
  bool applicable = false;
  std::string inapplicable_reason;
  VertexSet left, right;
  bool perfect_matching = false;
  std::vector<std::pair<int, int>> matching;
  bool well_covered = false;
  // On failure of the neighbourhood condition: matched edge (x, y) and a
  // non-adjacent pair (u, w) with u adjacent to y and w adjacent to x.
  std::optional<std::array<int, 4>> offending;
};

inline BipartiteWellcoverReport check_bipartite_wellcover(const Graph& g) {
  BipartiteWellcoverReport rep;
  const auto sides = bipartition(g);
  if (!sides) {
    rep.inapplicable_reason = "not bipartite";
    return rep;
  }
  for (int v = 0; v < g.n(); ++v)
    if (g.neighbors(v).empty()) {
      rep.inapplicable_reason = "isolated vertex";
      return rep;
    }
  rep.applicable = true;
  rep.left = sides->first;
  rep.right = sides->second;
  const auto matching = bipartite_matching(g, rep.left, rep.right);
  if (!matching) {
    rep.perfect_matching = false;
    rep.well_covered = false;
    return rep;
  }
  rep.perfect_matching = true;
  rep.matching = matching->pairs;
  for (auto [x, y] : rep.matching) {
    for (int u : g.neighbors(y).without(x))
      for (int w : g.neighbors(x).without(y))
        if (!g.has_edge(u, w)) {
          rep.well_covered = false;
          rep.offending = std::array<int, 4>{x, y, u, w};
          return rep;
        }
  }
  rep.well_covered = true;
  return rep;
}

}  // namespace wellcover

#endif
