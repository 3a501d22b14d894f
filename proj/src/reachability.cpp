#include "middlemen/reachability.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace middlemen {

namespace {

constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

struct Condensation {
  std::vector<std::size_t> component;  // node -> component id
  std::vector<std::vector<NodeId>> members;
  // Components are numbered in the order Tarjan completes them, which is a
  // reverse topological order: every arc leaves a component for one with a
  // smaller or equal id.
};

/// Iterative Tarjan over the subgraph excluding `skip`.
template <typename Neighbors>
Condensation condense(std::size_t n, Neighbors neighbors, std::optional<NodeId> skip) {
  Condensation result;
  result.component.assign(n, kUnvisited);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeId> stack;
  std::vector<std::pair<NodeId, std::size_t>> frames;  // node, next neighbour position
  std::size_t counter = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited || root == skip) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      auto adj = neighbors(v);
      if (pos < adj.size()) {
        NodeId w = adj[pos++];
        if (w == skip) continue;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<NodeId> members;
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          result.component[w] = result.members.size();
          members.push_back(w);
        } while (w != v);
        result.members.push_back(std::move(members));
      }
      NodeId finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        NodeId parent = frames.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return result;
}

template <typename Neighbors>
std::vector<NodeSet> closure_impl(std::size_t n, Neighbors neighbors, std::optional<NodeId> skip) {
  auto cond = condense(n, neighbors, skip);
  const std::size_t c = cond.members.size();
  // comp_reach[k]: nodes reachable from component k by at least one arc,
  // which includes k's own members iff k is cyclic.
  std::vector<NodeSet> comp_reach(c, NodeSet(n));
  for (std::size_t k = 0; k < c; ++k) {
    auto& reach = comp_reach[k];
    const bool cyclic = cond.members[k].size() > 1;
    for (NodeId v : cond.members[k]) {
      if (cyclic) reach.insert(v);
      for (NodeId w : neighbors(v)) {
        if (w == skip) continue;
        const std::size_t target = cond.component[w];
        if (target == k) continue;
        reach.insert(w);
        reach |= comp_reach[target];
      }
    }
  }
  std::vector<NodeSet> rows(n, NodeSet(n));
  for (NodeId v = 0; v < n; ++v) {
    if (v == skip) continue;
    rows[v] = comp_reach[cond.component[v]];
    rows[v].erase(v);
  }
  return rows;
}

}  // namespace

std::vector<NodeSet> reachability_closure(const DirectedGraph& g, Direction direction,
                                          std::optional<NodeId> without) {
  if (direction == Direction::Forward)
    return closure_impl(g.size(), [&g](NodeId v) { return g.successors(v); }, without);
  return closure_impl(g.size(), [&g](NodeId v) { return g.predecessors(v); }, without);
}

std::uint64_t total_reach(const std::vector<NodeSet>& closure) {
  std::uint64_t total = 0;
  for (const auto& row : closure) total += row.count();
  return total;
}

namespace {

NodeSet bfs_reach(const DirectedGraph& g, NodeId start, Direction direction) {
  NodeSet seen(g.size());
  std::vector<NodeId> frontier{start};
  while (!frontier.empty()) {
    NodeId v = frontier.back();
    frontier.pop_back();
    auto adj = direction == Direction::Forward ? g.successors(v) : g.predecessors(v);
    for (NodeId w : adj) {
      if (!seen.contains(w)) {
        seen.insert(w);
        frontier.push_back(w);
      }
    }
  }
  seen.erase(start);
  return seen;
}

}  // namespace

NodeSet successor_set(const DirectedGraph& g, NodeId node) {
  if (node >= g.size()) throw GraphError("node id out of range");
  return bfs_reach(g, node, Direction::Forward);
}

NodeSet predecessor_set(const DirectedGraph& g, NodeId node) {
  if (node >= g.size()) throw GraphError("node id out of range");
  return bfs_reach(g, node, Direction::Backward);
}

std::vector<std::vector<NodeId>> weakly_connected_components(const DirectedGraph& g,
                                                             std::optional<NodeId> without) {
  const std::size_t n = g.size();
  std::vector<NodeId> parent(n);
  std::iota(parent.begin(), parent.end(), NodeId{0});
  auto find = [&parent](NodeId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [from, to] : g.arcs()) {
    if (from == without || to == without) continue;
    auto a = find(from), b = find(to);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<NodeId>> groups(n);
  for (NodeId v = 0; v < n; ++v)
    if (v != without) groups[find(v)].push_back(v);
  std::vector<std::vector<NodeId>> components;
  for (auto& group : groups)
    if (!group.empty()) components.push_back(std::move(group));
  return components;
}

bool is_strongly_connected(const DirectedGraph& g) {
  if (g.size() <= 1) return true;
  return successor_set(g, 0).count() == g.size() - 1 &&
         predecessor_set(g, 0).count() == g.size() - 1;
}

std::vector<std::optional<std::size_t>> distances_from(const DirectedGraph& g, NodeId source) {
  std::vector<std::optional<std::size_t>> dist(g.size());
  dist.at(source) = 0;
  std::deque<NodeId> queue{source};
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (NodeId w : g.successors(v)) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> geodesic_distance(const DirectedGraph& g, NodeId from, NodeId to) {
  if (from >= g.size() || to >= g.size()) throw GraphError("node id out of range");
  return distances_from(g, from).at(to);
}

namespace {

/// Distances and shortest-path counts from `start` along `direction`.
void count_paths(const DirectedGraph& g, NodeId start, Direction direction,
                 std::vector<std::size_t>& dist, std::vector<std::uint64_t>& sigma) {
  dist.assign(g.size(), kUnvisited);
  sigma.assign(g.size(), 0);
  dist[start] = 0;
  sigma[start] = 1;
  std::deque<NodeId> queue{start};
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    auto adj = direction == Direction::Forward ? g.successors(v) : g.predecessors(v);
    for (NodeId w : adj) {
      if (dist[w] == kUnvisited) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
      if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
    }
  }
}

}  // namespace

GeodesicCounts geodesic_counts(const DirectedGraph& g, NodeId from, NodeId to) {
  if (from >= g.size() || to >= g.size()) throw GraphError("node id out of range");
  if (from == to) throw GraphError("geodesic counts need two distinct nodes");
  std::vector<std::size_t> d_from, d_to;
  std::vector<std::uint64_t> s_from, s_to;
  count_paths(g, from, Direction::Forward, d_from, s_from);
  count_paths(g, to, Direction::Backward, d_to, s_to);

  GeodesicCounts result;
  result.through.assign(g.size(), 0);
  if (d_from[to] == kUnvisited) return result;
  result.total = s_from[to];
  for (NodeId v = 0; v < g.size(); ++v) {
    if (v == from || v == to || d_from[v] == kUnvisited || d_to[v] == kUnvisited) continue;
    if (d_from[v] + d_to[v] == d_from[to]) result.through[v] = s_from[v] * s_to[v];
  }
  return result;
}

PairSet coverage(const DirectedGraph& g, NodeId node) {
  auto preds = predecessor_set(g, node).to_vector();
  auto succs = successor_set(g, node).to_vector();
  PairSet pairs;
  for (NodeId a : preds)
    for (NodeId b : succs)
      if (a != b) pairs.emplace_back(a, b);
  return pairs;
}

PairSet reach_pairs(const DirectedGraph& g, NodeId node) {
  PairSet pairs;
  for (NodeId b : successor_set(g, node).to_vector()) pairs.emplace_back(node, b);
  return pairs;
}

double local_clustering(const DirectedGraph& g, NodeId node) {
  if (node >= g.size()) throw GraphError("node id out of range");
  auto nb = neighborhood(g, node);
  auto around = (nb.successors | nb.predecessors).to_vector();
  const std::size_t k = around.size();
  if (k < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = x + 1; y < k; ++y)
      if (g.has_arc(around[x], around[y]) || g.has_arc(around[y], around[x])) ++links;
  return static_cast<double>(links) / (static_cast<double>(k * (k - 1)) / 2.0);
}

}  // namespace middlemen
