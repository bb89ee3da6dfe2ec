#pragma once

#include <string>
#include <vector>

#include <gemkit/colored_graph.hpp>
#include <gemkit/io.hpp>

namespace fixtures {

using gemkit::ColoredGraph;
using gemkit::Edge;

inline ColoredGraph complete2(int d) {
  std::vector<Edge> edges;
  for (int c = 0; c <= d; ++c) edges.push_back({0, 1, c});
  return ColoredGraph::build(d, 2, edges);
}

inline ColoredGraph s4_2() { return complete2(4); }

/// Two copies of s4_2 joined by crossing their color-4 edges.
inline std::vector<Edge> double_s4_edges() {
  std::vector<Edge> edges;
  for (int c = 0; c < 4; ++c) {
    edges.push_back({0, 1, c});
    edges.push_back({2, 3, c});
  }
  edges.push_back({0, 3, 4});
  edges.push_back({1, 2, 4});
  return edges;
}

inline ColoredGraph double_s4() { return ColoredGraph::build(4, 4, double_s4_edges()); }

inline ColoredGraph triangle() { return ColoredGraph::build(2, 3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}}); }

/// The 2-vertex 2-colored cycle (a circle).
inline ColoredGraph circle2() { return complete2(1); }

inline ColoredGraph catalog_graph(const std::string& name) { return gemkit::catalog(name).graph(); }

inline const std::vector<std::string>& closed_entries() {
  static const std::vector<std::string> names = {"s4_2", "s1xs3_8", "cp2_16"};
  return names;
}

}  // namespace fixtures
