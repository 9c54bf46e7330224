#ifndef WELLCOVER_GRAPH_HPP
#define WELLCOVER_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wellcover/errors.hpp"
#include "wellcover/vertex_set.hpp"

namespace wellcover {

// Finite simple undirected graph on vertices 0..n-1 with 1 <= n <= 64.
// Adjacency is kept as one bit mask per vertex; loops and parallel edges are
// rejected at construction.
class Graph {
 public:
  explicit Graph(int n) : n_(checked_order(n)), adj_(static_cast<std::size_t>(n), 0) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int n() const { return n_; }
  VertexSet vertices() const { return VertexSet::universe(n_); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
  }

  VertexSet neighbors(int v) const {
    check_vertex(v);
    return VertexSet::from_bits(adj_[static_cast<std::size_t>(v)]);
  }

  VertexSet closed_neighborhood(int v) const { return neighbors(v).with(v); }

  int degree(int v) const { return neighbors(v).count(); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  // Edges as ordered pairs (u < v), ascending lexicographically.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v : neighbors_above(u)) out.emplace_back(u, v);
    return out;
  }

  Graph complement() const {
    Graph h(n_);
    const std::uint64_t all = vertices().bits();
    for (int v = 0; v < n_; ++v)
      h.adj_[static_cast<std::size_t>(v)] =
          all & ~adj_[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);
    return h;
  }

  bool operator==(const Graph&) const = default;

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  }

  void check_subset(VertexSet s) const {
    if (!s.subset_of(vertices())) throw std::out_of_range("vertex set not within the graph");
  }

 private:
  static int checked_order(int n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (n > 64) throw LimitError("graph order above the supported bound of 64");
    return n;
  }
  // helper for edges(): neighbors of u with index greater than u
  VertexSet neighbors_above(int u) const {
    return VertexSet::from_bits(adj_[static_cast<std::size_t>(u)] & ~((std::uint64_t{2} << u) - 1));
  }

  int n_;
  std::vector<std::uint64_t> adj_;
};

// ---------------------------------------------------------------------------
// Elementary predicates.

inline bool is_independent(const Graph& g, VertexSet a) {
  g.check_subset(a);
  for (int v : a)
    if (g.neighbors(v).intersects(a)) return false;
  return true;
}

inline bool is_clique(const Graph& g, VertexSet a) {
  g.check_subset(a);
  for (int v : a)
    if (!a.without(v).subset_of(g.neighbors(v))) return false;
  return true;
}

inline bool is_maximal_clique(const Graph& g, VertexSet a) {
  if (a.empty() || !is_clique(g, a)) return false;
  for (int v : g.vertices() - a)
    if (a.subset_of(g.neighbors(v))) return false;
  return true;
}

inline bool is_maximal_independent_set(const Graph& g, VertexSet a) {
  if (!is_independent(g, a)) return false;
  for (int v : g.vertices() - a)
    if (!g.neighbors(v).intersects(a)) return false;
  return true;
}

// Every vertex of b has a neighbor in a. Membership of a vertex of b in a
// does not count; an actual edge into a is required.
inline bool dominates(const Graph& g, VertexSet a, VertexSet b) {
  g.check_subset(a);
  g.check_subset(b);
  for (int v : b)
    if (!g.neighbors(v).intersects(a)) return false;
  return true;
}

inline bool is_dominating_set(const Graph& g, VertexSet a) {
  return dominates(g, a, g.vertices() - a);
}

inline bool is_minimal_dominating_set(const Graph& g, VertexSet a) {
  if (!is_dominating_set(g, a)) return false;
  for (int v : a)
    if (is_dominating_set(g, a.without(v))) return false;
  return true;
}

inline bool is_vertex_cover(const Graph& g, VertexSet c) {
  g.check_subset(c);
  return is_independent(g, g.vertices() - c);
}

// ---------------------------------------------------------------------------
// Partitions and clique covers.

struct Partition {
  std::vector<VertexSet> parts;
  int size() const { return static_cast<int>(parts.size()); }
};

inline bool is_partition_of_vertices(const Graph& g, const Partition& p) {
  VertexSet seen;
  for (const VertexSet& part : p.parts) {
    g.check_subset(part);
    if (part.empty() || part.intersects(seen)) return false;
    seen |= part;
  }
  return seen == g.vertices();
}

inline bool is_partition_into_independent_sets(const Graph& g, const Partition& p) {
  if (!is_partition_of_vertices(g, p)) return false;
  for (const VertexSet& part : p.parts)
    if (!is_independent(g, part)) return false;
  return true;
}

// Partition of the vertices into pairwise disjoint maximal cliques.
struct CliqueCover {
  std::vector<VertexSet> parts;
  int size() const { return static_cast<int>(parts.size()); }
};

inline std::optional<std::string> clique_cover_violation(const Graph& g, const CliqueCover& c) {
  VertexSet seen;
  for (const VertexSet& part : c.parts) {
    g.check_subset(part);
    if (part.empty()) return "cover has an empty part";
    if (part.intersects(seen)) return "cover parts overlap";
    if (!is_maximal_clique(g, part)) return "cover part is not a maximal clique";
    seen |= part;
  }
  if (seen != g.vertices()) return "cover does not cover every vertex";
  return std::nullopt;
}

inline void validate_clique_cover(const Graph& g, const CliqueCover& c) {
  if (auto why = clique_cover_violation(g, c)) throw std::invalid_argument(*why);
}

// ---------------------------------------------------------------------------
// Induced subgraphs and bipartitions.

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;    // new index -> original vertex, ascending
  std::vector<int> from_original;  // original vertex -> new index, or -1
};

inline InducedSubgraph induced(const Graph& g, VertexSet s) {
  g.check_subset(s);
  if (s.empty()) throw std::invalid_argument("induced subgraph of the empty set");
  std::vector<int> to_original;
  std::vector<int> from_original(static_cast<std::size_t>(g.n()), -1);
  for (int v : s) {
    from_original[static_cast<std::size_t>(v)] = static_cast<int>(to_original.size());
    to_original.push_back(v);
  }
  Graph h(static_cast<int>(to_original.size()));
  for (int v : s)
    for (int w : g.neighbors(v) & s)
      if (v < w)
        h.add_edge(from_original[static_cast<std::size_t>(v)],
                   from_original[static_cast<std::size_t>(w)]);
  return InducedSubgraph{std::move(h), std::move(to_original), std::move(from_original)};
}

// Two-coloring by depth-first search, components rooted at their lowest
// vertex with that root colored "left". Returns nothing for odd cycles.
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
  std::vector<int> stack;
  for (int root = 0; root < g.n(); ++root) {
    if (color[static_cast<std::size_t>(root)] != -1) continue;
    color[static_cast<std::size_t>(root)] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (color[static_cast<std::size_t>(w)] == -1) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  VertexSet left, right;
  for (int v = 0; v < g.n(); ++v) (color[static_cast<std::size_t>(v)] == 0 ? left : right).add(v);
  return std::make_pair(left, right);
}

// Canonical order of vertex pairs (column-wise upper triangle); shared by the
// graph6 codec and the instance generators.
inline std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) out.emplace_back(i, j);
  return out;
}

}  // namespace wellcover

#endif
