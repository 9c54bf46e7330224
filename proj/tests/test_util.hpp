#ifndef WELLCOVER_TESTS_TEST_UTIL_HPP
#define WELLCOVER_TESTS_TEST_UTIL_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wellcover/graph.hpp"

namespace wellcover::testutil {

inline std::string fixture_path(const std::string& name) {
#ifdef WELLCOVER_FIXTURE_DIR
  return std::string(WELLCOVER_FIXTURE_DIR) + "/" + name;
#else
  return "fixtures/" + name;
#endif
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Build a graph from 1-based edge pairs, matching the labels used in the
// fixture files and all rendered output.
inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges_1based) {
  Graph g(n);
  for (auto [u, v] : edges_1based) g.add_edge(u - 1, v - 1);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace wellcover::testutil

#endif
