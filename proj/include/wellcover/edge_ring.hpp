#ifndef WELLCOVER_EDGE_RING_HPP
#define WELLCOVER_EDGE_RING_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wellcover/domination_search.hpp"
#include "wellcover/enumerate.hpp"
#include "wellcover/graph.hpp"
#include "wellcover/monomials.hpp"

namespace wellcover {

// The edge ideal of a graph: one square-free quadratic generator per edge.
inline MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<GeneralMonomial> gens;
  for (auto [u, v] : g.edges())
    gens.push_back(GeneralMonomial::variable(g.n(), u).times_variable(v));
  return MonomialIdeal(g.n(), std::move(gens));
}

// All nonempty supports of square-free monomials that are nonzero in the
// quotient ring. For an edge ideal these are exactly the nonempty
// independent sets of the graph.
inline std::vector<VertexSet> enumerate_nonzero_squarefree_supports(const MonomialIdeal& ideal,
                                                                    int max_brute_n = 20) {
  const int n = ideal.nvars();
  if (n > max_brute_n) throw LimitError("too many variables for brute-force support enumeration");
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    const VertexSet s = VertexSet::from_bits(mask);
    if (!ideal.contains(SquareFreeMonomial{s}.general(n))) out.push_back(s);
  }
  return out;
}

// Coefficient-one sum of the variables of one part of a clique cover.
inline LinearForm theta(const Graph& g, const CliqueCover& cover, int part_index) {
  validate_clique_cover(g, cover);
  if (part_index < 0 || part_index >= cover.size())
    throw std::out_of_range("cover part index out of range");
  return LinearForm::sum_of(g.n(), cover.parts[static_cast<std::size_t>(part_index)]);
}

namespace detail {

// True when some generator contains variable j and all its other variables
// lie in `chosen`; equivalently, x_j times the square-free monomial on
// `chosen` lies in the ideal.
inline bool annihilated_by(const MonomialIdeal& ideal, int j, VertexSet chosen) {
  for (const GeneralMonomial& g : ideal.generators()) {
    const VertexSet sup = g.support();
    if (sup.contains(j) && sup.without(j).subset_of(chosen)) return true;
  }
  return false;
}

}  // namespace detail

// Searches for a square-free monomial m, with support disjoint from the
// support of f, that is nonzero in the quotient ring and annihilates f
// (m*f lies in the ideal). For square-free ideals such a disjoint-support
// monomial witness exists whenever f has any annihilating monomial at all,
// so a null result certifies that f is a non-zero-divisor.
//
// The branching here is kept in lockstep with
// has_independent_dominating_set_outside in domination_search.hpp: on the
// edge ideal of a graph, with f the sum of one part of a clique cover, both
// searches visit the same tree in the same order and return the identical
// witness set. Any change to the candidate order, pruning, or branch order
// must be made in both places.
inline std::optional<SquareFreeMonomial> linear_zero_divisor_witness(const LinearForm& f,
                                                                     const MonomialIdeal& ideal,
                                                                     SearchBudget* budget = nullptr) {
  if (f.nvars() != ideal.nvars())
    throw std::invalid_argument("linear form and ideal from different rings");
  if (!ideal.squarefree())
    throw std::invalid_argument("disjoint-support witness search requires a square-free ideal");

  const int n = ideal.nvars();
  const VertexSet fsup = f.support();
  bool nonzero = false;
  for (int j : fsup) nonzero |= !ideal.contains(GeneralMonomial::variable(n, j));
  if (!nonzero) throw std::domain_error("linear form is zero in the quotient ring");

  // Targets are the variables of f not already zero in the ring; each must
  // end up annihilated by the chosen support.
  VertexSet targets;
  for (int j : fsup)
    if (!detail::annihilated_by(ideal, j, VertexSet{})) targets.add(j);

  const VertexSet candidates = VertexSet::universe(n) - fsup;

  std::function<std::optional<VertexSet>(VertexSet, VertexSet, VertexSet)> rec =
      [&](VertexSet chosen, VertexSet cand, VertexSet unsatisfied) -> std::optional<VertexSet> {
    if (budget) budget->tick();
    if (unsatisfied.empty()) return chosen;
    for (int t : unsatisfied)
      if (!detail::annihilated_by(ideal, t, chosen | cand)) return std::nullopt;
    if (cand.empty()) return std::nullopt;
    const int u = cand.lowest();
    if (!detail::annihilated_by(ideal, u, chosen)) {
      VertexSet still;
      for (int t : unsatisfied)
        if (!detail::annihilated_by(ideal, t, chosen.with(u))) still.add(t);
      if (auto found = rec(chosen.with(u), cand.without(u), still)) return found;
    }
    return rec(chosen, cand.without(u), unsatisfied);
  };

  if (auto found = rec(VertexSet{}, candidates, targets)) return SquareFreeMonomial{*found};
  return std::nullopt;
}

// Per-part regularity of the coefficient-one part sums of a clique cover in
// the quotient by the edge ideal. A part sum is a zero divisor exactly when
// the part is dominated by an independent set disjoint from it, so for a
// cover whose size equals the independence number, all parts regular is
// equivalent to the graph being uniformly well covered.
struct ThetaRegularityReport {
  int s = 0;
  CliqueCover cover;
  bool well_covered = false;
  std::vector<std::optional<SquareFreeMonomial>> witnesses;  // one entry per part
  bool all_regular = false;
};

inline ThetaRegularityReport check_theta_regularity(const Graph& g, const CliqueCover& cover,
                                                    SearchBudget* budget = nullptr) {
  validate_clique_cover(g, cover);
  const MisReport mis = enumerate_maximal_independent_sets(g, budget);
  bool s_matches = false;
  for (const VertexSet& m : mis.sets) s_matches |= (m.count() == cover.size());
  if (!s_matches)
    throw std::invalid_argument("cover size matches no maximal independent set size");

  ThetaRegularityReport rep;
  rep.s = cover.size();
  rep.cover = cover;
  rep.well_covered = (mis.min_size == mis.max_size);
  const MonomialIdeal ideal = edge_ideal(g);
  rep.all_regular = true;
  for (int i = 0; i < rep.s; ++i) {
    rep.witnesses.push_back(linear_zero_divisor_witness(theta(g, cover, i), ideal, budget));
    if (rep.witnesses.back()) rep.all_regular = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Independent exact-linear-algebra oracle for zero-divisor checks.
//
// Since a monomial ideal is graded, a polynomial annihilates a homogeneous
// linear form exactly when each of its homogeneous components does, so it
// suffices to search degree by degree: at degree k, build the matrix of the
// multiplication-by-f map from the degree-k part of the quotient to the
// degree-(k+1) part and look for a kernel vector.

namespace detail {

// All degree-k monomials outside the ideal, lex-descending. Subtrees whose
// partial product already lies in the ideal are skipped (membership in a
// monomial ideal is preserved by multiplying further variables in).
inline void monomials_of_degree(const MonomialIdeal& ideal, int k,
                                std::vector<GeneralMonomial>& out) {
  const int n = ideal.nvars();
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> place = [&](int var, int remaining) {
    if (ideal.contains(GeneralMonomial::from_exponents(exps))) return;
    if (var == n) {
      if (remaining == 0) out.push_back(GeneralMonomial::from_exponents(exps));
      return;
    }
    if (var == n - 1) {
      exps[static_cast<std::size_t>(var)] = remaining;
      place(var + 1, 0);
      exps[static_cast<std::size_t>(var)] = 0;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[static_cast<std::size_t>(var)] = e;
      place(var + 1, remaining - e);
    }
    exps[static_cast<std::size_t>(var)] = 0;
  };
  place(0, k);
}

}  // namespace detail

// Looks for a nonzero polynomial g in the quotient ring with f*g zero in the
// quotient, trying total degrees 0, 1, 2, ... in turn and returning the
// first kernel element found (lex-largest free column, coefficient one).
// For square-free ideals the search space is finite and a default degree
// bound equal to the number of variables is complete; otherwise an explicit
// bound is required.
inline std::optional<Polynomial> kernel_zero_divisor_oracle(
    const LinearForm& f, const MonomialIdeal& ideal,
    std::optional<int> degree_bound = std::nullopt) {
  if (f.nvars() != ideal.nvars())
    throw std::invalid_argument("linear form and ideal from different rings");
  if (!degree_bound) {
    if (!ideal.squarefree())
      throw std::invalid_argument("degree bound required unless the ideal is square-free");
    degree_bound = ideal.nvars();
  }
  if (*degree_bound < 0) throw std::invalid_argument("negative degree bound");

  const int n = ideal.nvars();
  bool nonzero = false;
  for (int j : f.support()) nonzero |= !ideal.contains(GeneralMonomial::variable(n, j));
  if (!nonzero) throw std::domain_error("linear form is zero in the quotient ring");

  for (int k = 0; k <= *degree_bound; ++k) {
    std::vector<GeneralMonomial> columns;
    detail::monomials_of_degree(ideal, k, columns);
    if (columns.empty()) break;  // the quotient has nothing left in this or any larger degree
    if (columns.size() > 20000) throw LimitError("annihilator matrix too large");

    std::vector<GeneralMonomial> rows;
    for (const GeneralMonomial& col : columns)
      for (const auto& [j, c] : f.coefficients()) {
        const GeneralMonomial p = col.times_variable(j);
        if (!ideal.contains(p)) rows.push_back(p);
      }
    std::sort(rows.begin(), rows.end(), LexGreater{});
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    auto row_index = [&](const GeneralMonomial& m) {
      const auto it = std::lower_bound(rows.begin(), rows.end(), m, LexGreater{});
      return static_cast<std::size_t>(it - rows.begin());
    };

    std::vector<std::vector<Rational>> a(rows.size(),
                                         std::vector<Rational>(columns.size(), Rational(0)));
    for (std::size_t ci = 0; ci < columns.size(); ++ci)
      for (const auto& [j, c] : f.coefficients()) {
        const GeneralMonomial p = columns[ci].times_variable(j);
        if (!ideal.contains(p)) a[row_index(p)][ci] += c;
      }

    // Gauss-Jordan elimination over the rationals; record pivot columns.
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
    std::size_t rank = 0;
    std::optional<std::size_t> first_free;
    for (std::size_t col = 0; col < columns.size(); ++col) {
      std::size_t sel = rank;
      while (sel < rows.size() && a[sel][col] == 0) ++sel;
      if (sel == rows.size()) {
        if (!first_free) first_free = col;
        continue;
      }
      std::swap(a[rank], a[sel]);
      const Rational inv = a[rank][col];
      for (Rational& x : a[rank]) x /= inv;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || a[r][col] == 0) continue;
        const Rational factor = a[r][col];
        for (std::size_t cc = col; cc < columns.size(); ++cc) a[r][cc] -= factor * a[rank][cc];
      }
      pivots.emplace_back(rank, col);
      ++rank;
    }
    if (first_free) {
      Polynomial g(n);
      g.add_term(columns[*first_free], Rational(1));
      for (const auto& [pr, pc] : pivots)
        if (a[pr][*first_free] != 0) g.add_term(columns[pc], -a[pr][*first_free]);
      return g;
    }
  }
  return std::nullopt;
}

}  // namespace wellcover

#endif
