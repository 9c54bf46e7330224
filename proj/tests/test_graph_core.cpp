#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

#include "wellcover/errors.hpp"
#include "wellcover/graph.hpp"
#include "wellcover/vertex_set.hpp"

#include "test_util.hpp"

using namespace wellcover;
using testutil::cycle_graph;
using testutil::make_graph;
using testutil::path_graph;

TEST_CASE("vertex set construction and element access") {
  VertexSet s = VertexSet::of({0, 3, 63});
  REQUIRE(s.count() == 3);
  REQUIRE(s.contains(0));
  REQUIRE(s.contains(3));
  REQUIRE(s.contains(63));
  REQUIRE_FALSE(s.contains(1));
  REQUIRE_FALSE(s.contains(-1));
  REQUIRE_FALSE(s.contains(64));
  REQUIRE(s.lowest() == 0);

  s.remove(0);
  REQUIRE_FALSE(s.contains(0));
  REQUIRE(s.lowest() == 3);

  REQUIRE_THROWS_AS(s.add(64), std::out_of_range);
  REQUIRE_THROWS_AS(s.add(-1), std::out_of_range);
  REQUIRE_THROWS_AS(VertexSet{}.lowest(), std::logic_error);

  REQUIRE(VertexSet::universe(3) == VertexSet::of({0, 1, 2}));
  REQUIRE(VertexSet::universe(64).count() == 64);
  REQUIRE(VertexSet{}.empty());
}

TEST_CASE("vertex set algebra and ordering") {
  const VertexSet a = VertexSet::of({0, 1, 4});
  const VertexSet b = VertexSet::of({1, 2});
  REQUIRE((a & b) == VertexSet::of({1}));
  REQUIRE((a | b) == VertexSet::of({0, 1, 2, 4}));
  REQUIRE((a - b) == VertexSet::of({0, 4}));
  REQUIRE((a ^ b) == VertexSet::of({0, 2, 4}));
  REQUIRE(a.intersects(b));
  REQUIRE_FALSE(a.intersects(VertexSet::of({3})));
  REQUIRE(VertexSet::of({1}).subset_of(a));
  REQUIRE_FALSE(b.subset_of(a));
  REQUIRE(VertexSet{}.subset_of(a));

  // Comparison is numeric on the underlying mask: {2} > {0,1}.
  REQUIRE(VertexSet::of({0, 1}) < VertexSet::of({2}));

  std::vector<int> seen;
  for (int v : a) seen.push_back(v);
  REQUIRE(seen == std::vector<int>{0, 1, 4});
}

TEST_CASE("graph construction enforces order bounds and simplicity") {
  REQUIRE_THROWS_AS(Graph(0), std::invalid_argument);
  REQUIRE_THROWS_AS(Graph(-2), std::invalid_argument);
  REQUIRE_THROWS_AS(Graph(65), LimitError);
  REQUIRE(Graph(64).n() == 64);

  Graph g(3);
  REQUIRE_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  REQUIRE_THROWS_AS(g.add_edge(-1, 0), std::out_of_range);

  g.add_edge(2, 0);
  REQUIRE(g.has_edge(0, 2));
  REQUIRE(g.has_edge(2, 0));
  g.add_edge(0, 2);  // repeated insertion keeps the graph simple
  REQUIRE(g.edge_count() == 1);
  REQUIRE(g.degree(0) == 1);
  REQUIRE(g.degree(1) == 0);
  REQUIRE(g.neighbors(0) == VertexSet::of({2}));
}

TEST_CASE("edge listing is ascending and round-trips through from_edges") {
  const Graph g = make_graph(4, {{3, 1}, {2, 4}, {1, 2}});
  const std::vector<std::pair<int, int>> want = {{0, 1}, {0, 2}, {1, 3}};
  REQUIRE(g.edges() == want);
  REQUIRE(Graph::from_edges(4, g.edges()) == g);
}

TEST_CASE("complement is an involution and never holds loops") {
  const Graph g = make_graph(5, {{1, 2}, {2, 3}, {4, 5}});
  const Graph c = g.complement();
  for (int u = 0; u < 5; ++u) {
    REQUIRE_FALSE(c.has_edge(u, u));
    for (int v = u + 1; v < 5; ++v) REQUIRE(c.has_edge(u, v) == !g.has_edge(u, v));
  }
  REQUIRE(c.complement() == g);
  REQUIRE(g.edge_count() + c.edge_count() == 10);
}

TEST_CASE("independence and clique predicates") {
  const Graph g = cycle_graph(5);
  REQUIRE(is_independent(g, VertexSet::of({0, 2})));
  REQUIRE_FALSE(is_independent(g, VertexSet::of({0, 1})));
  REQUIRE(is_independent(g, VertexSet{}));
  REQUIRE(is_clique(g, VertexSet::of({0, 1})));
  REQUIRE(is_clique(g, VertexSet::of({3})));
  REQUIRE(is_clique(g, VertexSet{}));
  REQUIRE_FALSE(is_clique(g, VertexSet::of({0, 1, 2})));

  REQUIRE(is_maximal_independent_set(g, VertexSet::of({0, 2})));
  REQUIRE_FALSE(is_maximal_independent_set(g, VertexSet::of({0})));
  REQUIRE(is_maximal_clique(g, VertexSet::of({0, 1})));
  REQUIRE_FALSE(is_maximal_clique(g, VertexSet::of({0})));
  REQUIRE_FALSE(is_maximal_clique(g, VertexSet{}));

  REQUIRE_THROWS_AS(is_independent(g, VertexSet::of({5})), std::out_of_range);
}

TEST_CASE("domination requires an actual edge, membership does not count") {
  // Isolated vertex: nothing dominates it, and it dominates nothing, not
  // even itself.
  const Graph lone = make_graph(2, {});
  REQUIRE_FALSE(dominates(lone, VertexSet::of({0}), VertexSet::of({0})));
  REQUIRE_FALSE(dominates(lone, VertexSet::of({0}), VertexSet::of({1})));
  REQUIRE(dominates(lone, VertexSet::of({0}), VertexSet{}));

  const Graph p = path_graph(4);
  REQUIRE(dominates(p, VertexSet::of({1}), VertexSet::of({0, 2})));
  REQUIRE_FALSE(dominates(p, VertexSet::of({1}), VertexSet::of({0, 3})));
  // A set can dominate a set it overlaps, provided the shared vertices have
  // neighbors inside it too.
  REQUIRE(dominates(p, VertexSet::of({1, 2}), VertexSet::of({1, 2})));

  REQUIRE(is_dominating_set(p, VertexSet::of({1, 2})));
  REQUIRE(is_dominating_set(p, VertexSet::of({0, 1, 2, 3})));
  REQUIRE_FALSE(is_dominating_set(p, VertexSet::of({0, 1})));
  REQUIRE(is_minimal_dominating_set(p, VertexSet::of({1, 2})));
  REQUIRE_FALSE(is_minimal_dominating_set(p, VertexSet::of({0, 1, 2})));
  REQUIRE(is_minimal_dominating_set(p, VertexSet::of({0, 3})));
}

TEST_CASE("vertex covers are exactly the complements of independent sets") {
  const Graph gb =
      make_graph(6, {{1, 2}, {1, 6}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {5, 6}});
  REQUIRE(is_vertex_cover(gb, VertexSet::of({1, 3, 4, 5})));        // labels 2,4,5,6
  REQUIRE_FALSE(is_vertex_cover(gb, VertexSet::of({1, 2, 3, 4})));  // labels 2,3,4,5 miss edge 1-6
  REQUIRE(is_vertex_cover(gb, gb.vertices()));
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const VertexSet s = VertexSet::from_bits(mask);
    REQUIRE(is_vertex_cover(gb, s) == is_independent(gb, gb.vertices() - s));
  }
}

TEST_CASE("partition validation catches empty parts, overlap, and gaps") {
  const Graph g = cycle_graph(4);
  REQUIRE(is_partition_of_vertices(
      g, Partition{{VertexSet::of({0, 2}), VertexSet::of({1, 3})}}));
  REQUIRE_FALSE(is_partition_of_vertices(g, Partition{{VertexSet::of({0, 1, 2, 3}), VertexSet{}}}));
  REQUIRE_FALSE(is_partition_of_vertices(
      g, Partition{{VertexSet::of({0, 1}), VertexSet::of({1, 2, 3})}}));
  REQUIRE_FALSE(is_partition_of_vertices(g, Partition{{VertexSet::of({0, 1})}}));

  REQUIRE(is_partition_into_independent_sets(
      g, Partition{{VertexSet::of({0, 2}), VertexSet::of({1, 3})}}));
  REQUIRE_FALSE(is_partition_into_independent_sets(
      g, Partition{{VertexSet::of({0, 1}), VertexSet::of({2, 3})}}));
}

TEST_CASE("clique cover validation reports the first violated requirement") {
  const Graph g = cycle_graph(6);
  const CliqueCover good{{VertexSet::of({0, 1}), VertexSet::of({2, 3}), VertexSet::of({4, 5})}};
  REQUIRE_FALSE(clique_cover_violation(g, good).has_value());
  REQUIRE_NOTHROW(validate_clique_cover(g, good));

  const CliqueCover empty_part{{VertexSet::of({0, 1}), VertexSet{}}};
  REQUIRE(*clique_cover_violation(g, empty_part) == "cover has an empty part");

  const CliqueCover overlap{
      {VertexSet::of({0, 1}), VertexSet::of({1, 2}), VertexSet::of({3, 4})}};
  REQUIRE(*clique_cover_violation(g, overlap) == "cover parts overlap");

  // {0} is a clique but not maximal; {0,2} is not a clique at all.
  const CliqueCover small{{VertexSet::of({0}), VertexSet::of({1, 2}), VertexSet::of({3, 4})}};
  REQUIRE(*clique_cover_violation(g, small) == "cover part is not a maximal clique");
  const CliqueCover notclique{{VertexSet::of({0, 2})}};
  REQUIRE(*clique_cover_violation(g, notclique) == "cover part is not a maximal clique");

  const CliqueCover gap{{VertexSet::of({0, 1}), VertexSet::of({2, 3})}};
  REQUIRE(*clique_cover_violation(g, gap) == "cover does not cover every vertex");
  REQUIRE_THROWS_AS(validate_clique_cover(g, gap), std::invalid_argument);
}

TEST_CASE("induced subgraphs keep adjacency and index maps consistent") {
  const Graph g = make_graph(6, {{1, 2}, {1, 6}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}});
  const InducedSubgraph sub = induced(g, VertexSet::of({1, 3, 4, 5}));
  REQUIRE(sub.graph.n() == 4);
  REQUIRE(sub.to_original == std::vector<int>{1, 3, 4, 5});
  REQUIRE(sub.from_original == std::vector<int>{-1, 0, -1, 1, 2, 3});
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      REQUIRE(sub.graph.has_edge(a, b) == g.has_edge(sub.to_original[a], sub.to_original[b]));
  REQUIRE_THROWS_AS(induced(g, VertexSet{}), std::invalid_argument);
}

TEST_CASE("bipartitions two-color even structures and reject odd cycles") {
  const auto p4 = bipartition(path_graph(4));
  REQUIRE(p4.has_value());
  REQUIRE(p4->first == VertexSet::of({0, 2}));
  REQUIRE(p4->second == VertexSet::of({1, 3}));

  REQUIRE_FALSE(bipartition(cycle_graph(5)).has_value());
  REQUIRE(bipartition(cycle_graph(6)).has_value());

  // Components are rooted at their lowest vertex, which lands on the left.
  const auto two = bipartition(make_graph(4, {{1, 2}, {3, 4}}));
  REQUIRE(two->first == VertexSet::of({0, 2}));
  REQUIRE(two->second == VertexSet::of({1, 3}));

  // An isolated vertex is left-colored and constrains nothing.
  const auto iso = bipartition(make_graph(3, {{2, 3}}));
  REQUIRE(iso->first == VertexSet::of({0, 1}));
  REQUIRE(iso->second == VertexSet::of({2}));
}

TEST_CASE("vertex pair order walks the upper triangle column by column") {
  const std::vector<std::pair<int, int>> want = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  REQUIRE(vertex_pairs(4) == want);
  REQUIRE(vertex_pairs(1).empty());
  REQUIRE(vertex_pairs(64).size() == 2016);
}
