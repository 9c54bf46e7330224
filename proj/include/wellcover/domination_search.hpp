#ifndef WELLCOVER_DOMINATION_SEARCH_HPP
#define WELLCOVER_DOMINATION_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "wellcover/errors.hpp"
#include "wellcover/graph.hpp"

namespace wellcover {

// Deterministic work budget shared by the backtracking searches. A null
// pointer means "unbounded"; callers that must terminate (the CLI, the scan
// harness) pass an explicit budget and map exhaustion to a limit failure.
struct SearchBudget {
  std::uint64_t max_nodes = 400'000'000;
  std::uint64_t used = 0;
  void tick() {
    if (++used > max_nodes) throw LimitError("search budget exhausted");
  }
};

// Is there an independent subset of V minus c that dominates c?
// Returns the first witness found, or nothing.
//
// Branching discipline (kept in lockstep with the square-free annihilator
// search in edge_ring.hpp, which must produce the identical witness when run
// on an edge ideal): candidates are examined in ascending vertex order, each
// node first tests for success, then prunes, then recurses into "include the
// lowest candidate" before "exclude it". Prunes are sound — they only discard
// subtrees without witnesses — so the first witness in this depth-first order
// is a well-defined function of the graph and c alone.
inline std::optional<VertexSet> has_independent_dominating_set_outside(
    const Graph& g, VertexSet c, SearchBudget* budget = nullptr) {
  g.check_subset(c);
  if (c.empty()) throw std::invalid_argument("target clique must be non-empty");

  auto rec = [&](auto&& self, VertexSet chosen, VertexSet cand,
                 VertexSet undominated) -> std::optional<VertexSet> {
    if (budget) budget->tick();
    if (undominated.empty()) return chosen;
    for (int t : undominated)
      if (!g.neighbors(t).intersects(chosen | cand)) return std::nullopt;
    if (cand.empty()) return std::nullopt;
    const int u = cand.lowest();
    if (!g.neighbors(u).intersects(chosen)) {
      if (auto r = self(self, chosen.with(u), cand.without(u), undominated - g.neighbors(u)))
        return r;
    }
    return self(self, chosen, cand.without(u), undominated);
  };
  return rec(rec, VertexSet{}, g.vertices() - c, c);
}

}  // namespace wellcover

#endif
