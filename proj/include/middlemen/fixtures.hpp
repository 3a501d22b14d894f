#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "middlemen/graph.hpp"

namespace middlemen {

struct Fixture {
  std::string name;
  std::string description;
  DirectedGraph graph;
};

/// fig1, fig2, fig4, star6, cycle6 in that order.
const std::vector<Fixture>& fixtures();

/// nullopt for an unknown name.
std::optional<DirectedGraph> fixture(std::string_view name);

/// Undirected star on n nodes: leaves 1..n-1, centre n.
DirectedGraph star_graph(std::size_t n);

/// Directed cycle 1 -> 2 -> ... -> n -> 1.
DirectedGraph cycle_graph(std::size_t n);

/// Every ordered pair of distinct nodes.
DirectedGraph complete_graph(std::size_t n);

}  // namespace middlemen
