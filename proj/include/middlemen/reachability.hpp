#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "middlemen/graph.hpp"

namespace middlemen {

/// Sorted list of ordered node pairs.
using PairSet = std::vector<Arc>;

enum class Direction { Forward, Backward };

/// Row k holds S_k (Forward) or P_k (Backward): every node reachable from
/// (resp. reaching) k by a directed path of at least one arc, excluding k
/// itself even when k lies on a cycle.
///
/// When `without` is set, that node is treated as deleted: its row is empty
/// and no path may pass through it. This is the closure of D - i without
/// renumbering the remaining nodes.
///
/// Runs on the condensation (strongly connected components in reverse
/// topological order, rows merged as bitsets), O(n + m * n / 64).
std::vector<NodeSet> reachability_closure(const DirectedGraph& g,
                                          Direction direction = Direction::Forward,
                                          std::optional<NodeId> without = std::nullopt);

/// Sum of the row sizes of the forward closure (total connectivity).
std::uint64_t total_reach(const std::vector<NodeSet>& closure);

NodeSet successor_set(const DirectedGraph& g, NodeId node);
NodeSet predecessor_set(const DirectedGraph& g, NodeId node);

/// Components of the underlying undirected graph, each sorted by id, ordered
/// by smallest member.
std::vector<std::vector<NodeId>> weakly_connected_components(
    const DirectedGraph& g, std::optional<NodeId> without = std::nullopt);

bool is_strongly_connected(const DirectedGraph& g);

/// Breadth-first arc distances from `source`; nullopt marks unreachable nodes.
std::vector<std::optional<std::size_t>> distances_from(const DirectedGraph& g, NodeId source);

/// Shortest directed path length in arcs; nullopt when `to` is unreachable.
std::optional<std::size_t> geodesic_distance(const DirectedGraph& g, NodeId from, NodeId to);

struct GeodesicCounts {
  std::uint64_t total = 0;
  /// through[k] is the number of geodesics with k as an interior node.
  std::vector<std::uint64_t> through;
};

GeodesicCounts geodesic_counts(const DirectedGraph& g, NodeId from, NodeId to);

/// P_i x S_i without pairs (a, a). Those only arise on cycles and never
/// describe an interaction between two distinct third parties.
PairSet coverage(const DirectedGraph& g, NodeId node);

/// {(i, j) : j in S_i}.
PairSet reach_pairs(const DirectedGraph& g, NodeId node);

/// Local clustering coefficient on the underlying undirected graph; 0 for
/// nodes with fewer than two distinct neighbours.
double local_clustering(const DirectedGraph& g, NodeId node);

}  // namespace middlemen
