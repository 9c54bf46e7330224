#ifndef WELLCOVER_ENUMERATE_HPP
#define WELLCOVER_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "wellcover/domination_search.hpp"
#include "wellcover/errors.hpp"
#include "wellcover/graph.hpp"

namespace wellcover {

namespace detail {

// Pivoted Bron-Kerbosch over adjacency masks. The pivot is the vertex of
// P|X with the most neighbours inside P (ties to the lowest index).
inline void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                          std::vector<VertexSet>& out, SearchBudget* budget) {
  if (budget) budget->tick();
  if (p == 0 && x == 0) {
    out.push_back(VertexSet::from_bits(r));
    return;
  }
  int pivot = -1, best = -1;
  for (std::uint64_t m = p | x; m != 0; m &= m - 1) {
    const int v = std::countr_zero(m);
    const int deg = std::popcount(p & g.neighbors(v).bits());
    if (deg > best) {
      best = deg;
      pivot = v;
    }
  }
  std::uint64_t cand = p & ~g.neighbors(pivot).bits();
  while (cand != 0) {
    const int v = std::countr_zero(cand);
    const std::uint64_t vb = std::uint64_t{1} << v;
    cand &= cand - 1;
    const std::uint64_t nv = g.neighbors(v).bits();
    bron_kerbosch(g, r | vb, p & nv, x & nv, out, budget);
    p &= ~vb;
    x |= vb;
  }
}

}  // namespace detail

// All maximal cliques, duplicate-free, ascending by mask value.
inline std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g,
                                                        SearchBudget* budget = nullptr) {
  std::vector<VertexSet> out;
  detail::bron_kerbosch(g, 0, g.vertices().bits(), 0, out, budget);
  std::sort(out.begin(), out.end());
  return out;
}

struct MisReport {
  std::vector<VertexSet> sets;  // ascending by mask value
  int min_size = 0;
  int max_size = 0;
  int independence_number() const { return max_size; }
};

// Maximal independent sets = maximal cliques of the complement.
inline MisReport enumerate_maximal_independent_sets(const Graph& g,
                                                    SearchBudget* budget = nullptr) {
  MisReport rep;
  rep.sets = enumerate_maximal_cliques(g.complement(), budget);
  rep.min_size = 64;
  for (const VertexSet& s : rep.sets) {
    rep.min_size = std::min(rep.min_size, s.count());
    rep.max_size = std::max(rep.max_size, s.count());
  }
  return rep;
}

inline int independence_number(const Graph& g, SearchBudget* budget = nullptr) {
  return enumerate_maximal_independent_sets(g, budget).max_size;
}

// ---------------------------------------------------------------------------
// Certificates.

struct WellCovered {
  int common_size = 0;
};
struct NotWellCovered {
  VertexSet witness_small;  // first smallest maximal independent set, mask order
  VertexSet witness_large;  // first largest maximal independent set, mask order
};
struct UniformlyWellCovered {
  CliqueCover partition;
};
struct NotUniform {
  enum class Reason { kNoCoverExists, kIndependentDominator };
  Reason reason = Reason::kNoCoverExists;
  // Populated for kIndependentDominator: the first cover examined, the index
  // of its failing part, and an independent set outside that part which
  // dominates it.
  std::optional<CliqueCover> cover;
  int clique_index = -1;
  VertexSet witness;
};

using Certificate = std::variant<WellCovered, NotWellCovered, UniformlyWellCovered, NotUniform>;

inline bool certificate_holds(const Certificate& c) {
  return std::holds_alternative<WellCovered>(c) || std::holds_alternative<UniformlyWellCovered>(c);
}

inline Certificate is_well_covered(const Graph& g, const MisReport& rep) {
  if (rep.min_size == rep.max_size) return WellCovered{rep.min_size};
  NotWellCovered w;
  for (const VertexSet& s : rep.sets)
    if (s.count() == rep.min_size) {
      w.witness_small = s;
      break;
    }
  for (const VertexSet& s : rep.sets)
    if (s.count() == rep.max_size) {
      w.witness_large = s;
      break;
    }
  (void)g;
  return w;
}

inline Certificate is_well_covered(const Graph& g, SearchBudget* budget = nullptr) {
  return is_well_covered(g, enumerate_maximal_independent_sets(g, budget));
}

// ---------------------------------------------------------------------------
// Exact partition of the vertices into s disjoint maximal cliques.
//
// Backtracking always branches on the lowest uncovered vertex, trying the
// maximal cliques through it in ascending mask order, so each cover is
// produced exactly once and with its parts ordered by minimum element.

inline std::vector<CliqueCover> find_clique_covers(const Graph& g, int s,
                                                   SearchBudget* budget = nullptr) {
  if (s < 1) throw std::invalid_argument("cover size must be positive");
  const std::vector<VertexSet> cliques = enumerate_maximal_cliques(g, budget);
  int largest = 0;
  for (const VertexSet& c : cliques) largest = std::max(largest, c.count());

  std::vector<CliqueCover> out;
  std::vector<VertexSet> parts;
  auto rec = [&](auto&& self, VertexSet uncovered) -> void {
    if (budget) budget->tick();
    if (uncovered.empty()) {
      if (static_cast<int>(parts.size()) == s) out.push_back(CliqueCover{parts});
      return;
    }
    const int left = s - static_cast<int>(parts.size());
    if (left <= 0 || uncovered.count() > left * largest) return;
    const int v = uncovered.lowest();
    for (const VertexSet& c : cliques) {
      if (!c.contains(v) || !c.subset_of(uncovered)) continue;
      parts.push_back(c);
      self(self, uncovered - c);
      parts.pop_back();
    }
  };
  rec(rec, g.vertices());
  return out;
}

// ---------------------------------------------------------------------------
// Uniform well-coveredness.
//
// A graph is uniformly well covered exactly when some partition of the
// vertices into disjoint maximal cliques exists such that no part can be
// dominated by an independent set disjoint from it. Any partition with that
// property forces every maximal independent set to meet every part exactly
// once, so its size equals the independence number; only covers of that size
// need to be examined.

inline Certificate is_uniformly_well_covered(const Graph& g, SearchBudget* budget = nullptr) {
  const MisReport mis = enumerate_maximal_independent_sets(g, budget);
  const int alpha = mis.max_size;
  const std::vector<CliqueCover> covers = find_clique_covers(g, alpha, budget);
  if (covers.empty()) return NotUniform{NotUniform::Reason::kNoCoverExists, std::nullopt, -1, {}};

  std::optional<NotUniform> first_failure;
  for (const CliqueCover& cover : covers) {
    bool all_parts_pass = true;
    for (int i = 0; i < cover.size(); ++i) {
      if (auto w = has_independent_dominating_set_outside(g, cover.parts[static_cast<std::size_t>(i)], budget)) {
        all_parts_pass = false;
        if (!first_failure)
          first_failure = NotUniform{NotUniform::Reason::kIndependentDominator, cover, i, *w};
        break;
      }
    }
    if (!all_parts_pass) continue;
    // Cross-check against the partition definition before certifying.
    for (const VertexSet& m : mis.sets)
      for (const VertexSet& part : cover.parts)
        if ((m & part).count() != 1)
          throw std::logic_error("uniformity certificate failed definitional cross-check");
    return UniformlyWellCovered{cover};
  }
  return *first_failure;
}

// ---------------------------------------------------------------------------
// Minimal dominating sets by bounded brute force.
//
// Masks are scanned in ascending order; a dominating set is minimal exactly
// when deleting any single element breaks domination (domination is monotone
// under supersets, so single deletions suffice).

inline std::vector<VertexSet> enumerate_minimal_dominating_sets(const Graph& g,
                                                                int max_brute_n = 16) {
  if (g.n() > max_brute_n)
    throw LimitError("minimal dominating set enumeration above the brute-force bound");
  std::vector<std::uint64_t> closed(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) closed[static_cast<std::size_t>(v)] = g.closed_neighborhood(v).bits();
  const std::uint64_t all = g.vertices().bits();

  auto dominated = [&](std::uint64_t mask) {
    std::uint64_t covered = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1)
      covered |= closed[static_cast<std::size_t>(std::countr_zero(m))];
    return covered == all;
  };

  std::vector<VertexSet> out;
  const std::uint64_t end = (g.n() == 64) ? 0 : (std::uint64_t{1} << g.n());
  for (std::uint64_t mask = 1; mask != end; ++mask) {
    if (!dominated(mask)) continue;
    bool minimal = true;
    for (std::uint64_t m = mask; m != 0 && minimal; m &= m - 1)
      minimal = !dominated(mask & ~(std::uint64_t{1} << std::countr_zero(m)));
    if (minimal) out.push_back(VertexSet::from_bits(mask));
  }
  return out;
}

inline bool is_well_dominated(const Graph& g, int max_brute_n = 16) {
  const auto sets = enumerate_minimal_dominating_sets(g, max_brute_n);
  for (const VertexSet& s : sets)
    if (s.count() != sets.front().count()) return false;
  return true;
}

inline int domination_number(const Graph& g, int max_brute_n = 16) {
  int best = 64;
  for (const VertexSet& s : enumerate_minimal_dominating_sets(g, max_brute_n))
    best = std::min(best, s.count());
  return best;
}

}  // namespace wellcover

#endif
