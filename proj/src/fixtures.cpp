#include "middlemen/fixtures.hpp"

#include <utility>

namespace middlemen {

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= n; ++k) labels.push_back(std::to_string(k));
  return labels;
}

/// Arcs given with 1-based labels.
DirectedGraph numbered_graph(std::size_t n, std::initializer_list<std::pair<int, int>> arcs) {
  std::vector<Arc> ids;
  for (auto [from, to] : arcs)
    ids.emplace_back(static_cast<NodeId>(from - 1), static_cast<NodeId>(to - 1));
  return DirectedGraph(numbered(n), std::move(ids));
}

}  // namespace

DirectedGraph star_graph(std::size_t n) {
  std::vector<Arc> arcs;
  for (NodeId leaf = 0; leaf + 1 < n; ++leaf) {
    arcs.emplace_back(leaf, n - 1);
    arcs.emplace_back(n - 1, leaf);
  }
  return DirectedGraph(numbered(n), std::move(arcs));
}

DirectedGraph cycle_graph(std::size_t n) {
  std::vector<Arc> arcs;
  for (NodeId v = 0; v < n && n > 1; ++v) arcs.emplace_back(v, (v + 1) % n);
  return DirectedGraph(numbered(n), std::move(arcs));
}

DirectedGraph complete_graph(std::size_t n) {
  std::vector<Arc> arcs;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = 0; b < n; ++b)
      if (a != b) arcs.emplace_back(a, b);
  return DirectedGraph(numbered(n), std::move(arcs));
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"fig1",
       "acyclic 7-node network: weak middlemen 2 and 5, strong middleman 6",
       numbered_graph(7, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 6}, {5, 6}, {6, 7}})},
      {"fig2",
       "6-node network without middlemen; node 4 is contested by pairs such as {2,3} but by no single node",
       numbered_graph(6, {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}, {4, 5}, {4, 6}})},
      {"fig4",
       "10-node layered network: middlemen 4,5,6 are out-ranked by 7,8 on betweenness",
       numbered_graph(10, {{1, 4}, {2, 5}, {3, 6}, {4, 7}, {4, 8}, {5, 7}, {5, 8}, {6, 7}, {6, 8},
                           {7, 9}, {7, 10}, {8, 9}, {8, 10}})},
      {"star6", "undirected star, centre 6 and leaves 1-5", star_graph(6)},
      {"cycle6", "directed 6-cycle 1->2->...->6->1", cycle_graph(6)},
  };
  return all;
}

std::optional<DirectedGraph> fixture(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f.graph;
  return std::nullopt;
}

}  // namespace middlemen
