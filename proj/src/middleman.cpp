#include "middlemen/middleman.hpp"

#include <numeric>

#include "bool_matrix.hpp"

namespace middlemen {

std::string_view to_string(MiddlemanClass cls) {
  switch (cls) {
    case MiddlemanClass::NonMiddleman: return "none";
    case MiddlemanClass::WeakMiddleman: return "weak";
    case MiddlemanClass::StrongMiddleman: return "strong";
  }
  return "unknown";
}

namespace {

void check_node(const DirectedGraph& g, NodeId node) {
  if (node >= g.size()) throw GraphError("node id out of range");
}

/// Pairs (a, b), neither equal to `removed`, reachable in `full` but not in
/// `reduced` (the closure of D - removed).
template <typename Visit>
void for_each_lost_pair(const std::vector<NodeSet>& full, const std::vector<NodeSet>& reduced,
                        NodeId removed, Visit visit) {
  for (NodeId a = 0; a < full.size(); ++a) {
    if (a == removed) continue;
    NodeSet lost = full[a];
    lost.subtract(reduced[a]);
    lost.erase(removed);
    for (NodeId b : lost.to_vector()) visit(a, b);
  }
}

std::uint64_t brokerage_from(const std::vector<NodeSet>& full, std::uint64_t full_total,
                             const DirectedGraph& g, NodeId node) {
  auto reduced = reachability_closure(g, Direction::Forward, node);
  std::uint64_t own_successors = full[node].count();
  std::uint64_t own_predecessors = 0;
  for (const auto& row : full) own_predecessors += row.contains(node) ? 1 : 0;
  return full_total - total_reach(reduced) - own_successors - own_predecessors;
}

}  // namespace

NodeSet pair_middleman_set(const DirectedGraph& g, NodeId from, NodeId to) {
  check_node(g, from);
  check_node(g, to);
  if (from == to) throw GraphError("pair middleman set needs two distinct nodes");
  NodeSet result(g.size());
  if (g.has_arc(from, to) || !successor_set(g, from).contains(to)) return result;
  for (NodeId h = 0; h < g.size(); ++h) {
    if (h == from || h == to) continue;
    auto reduced = reachability_closure(g, Direction::Forward, h);
    if (!reduced[from].contains(to)) result.insert(h);
  }
  return result;
}

PairSet brokered_pairs(const DirectedGraph& g, NodeId node) {
  check_node(g, node);
  auto full = reachability_closure(g);
  auto reduced = reachability_closure(g, Direction::Forward, node);
  PairSet pairs;
  for_each_lost_pair(full, reduced, node, [&](NodeId a, NodeId b) { pairs.emplace_back(a, b); });
  return pairs;
}

NodeSet middleman_set(const DirectedGraph& g) {
  NodeSet result(g.size());
  auto b = brokerage(g);
  for (NodeId h = 0; h < g.size(); ++h)
    if (b[h] > 0) result.insert(h);
  return result;
}

MiddlemanClass classify(const DirectedGraph& g, NodeId node) {
  check_node(g, node);
  if (brokerage(g, node) == 0) return MiddlemanClass::NonMiddleman;
  auto before = weakly_connected_components(g).size();
  auto after = weakly_connected_components(g, node).size();
  return after > before ? MiddlemanClass::StrongMiddleman : MiddlemanClass::WeakMiddleman;
}

std::vector<MiddlemanClass> classify(const DirectedGraph& g) {
  std::vector<MiddlemanClass> out;
  out.reserve(g.size());
  auto b = brokerage(g);
  auto before = weakly_connected_components(g).size();
  for (NodeId h = 0; h < g.size(); ++h) {
    if (b[h] == 0) {
      out.push_back(MiddlemanClass::NonMiddleman);
    } else {
      auto after = weakly_connected_components(g, h).size();
      out.push_back(after > before ? MiddlemanClass::StrongMiddleman
                                   : MiddlemanClass::WeakMiddleman);
    }
  }
  return out;
}

std::uint64_t brokerage(const DirectedGraph& g, NodeId node) {
  check_node(g, node);
  auto full = reachability_closure(g);
  return brokerage_from(full, total_reach(full), g, node);
}

std::vector<std::uint64_t> brokerage(const DirectedGraph& g) {
  auto full = reachability_closure(g);
  const auto total = total_reach(full);
  std::vector<std::uint64_t> out(g.size());
  for (NodeId h = 0; h < g.size(); ++h) out[h] = brokerage_from(full, total, g, h);
  return out;
}

PotentialBrokerage potential_brokerage(const DirectedGraph& g) {
  auto full = reachability_closure(g);
  PotentialBrokerage result;
  for (NodeId v = 0; v < g.size(); ++v) result.raw += full[v].count() - g.out_degree(v);
  result.normalizer = std::max<std::uint64_t>(result.raw, 1);
  return result;
}

Rational middleman_power(const DirectedGraph& g, NodeId node) {
  auto b = brokerage(g, node);
  auto B = potential_brokerage(g).normalizer;
  return Rational(static_cast<std::int64_t>(b), static_cast<std::int64_t>(B));
}

namespace {

/// (d(a, node), d(node, b)) for every brokered pair (a, b). Both are finite:
/// b is reachable from a only through `node`.
std::vector<std::pair<std::size_t, std::size_t>> brokered_distances(const DirectedGraph& g,
                                                                    NodeId node) {
  auto pairs = brokered_pairs(g, node);
  auto from_node = distances_from(g, node);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(pairs.size());
  std::optional<NodeId> cached_source;
  std::vector<std::optional<std::size_t>> from_source;
  for (auto [a, b] : pairs) {
    if (cached_source != a) {
      from_source = distances_from(g, a);
      cached_source = a;
    }
    out.emplace_back(from_source[node].value(), from_node[b].value());
  }
  return out;
}

}  // namespace

double distance_based_power(const DirectedGraph& g, NodeId node) {
  long double total = 0;
  for (auto [in, out] : brokered_distances(g, node))
    total += 1.0L / (static_cast<long double>(in) * static_cast<long double>(out));
  return static_cast<double>(total);
}

Rational distance_based_power_exact(const DirectedGraph& g, NodeId node) {
  Rational total;
  for (auto [in, out] : brokered_distances(g, node))
    total += Rational(1, static_cast<std::int64_t>(in * out));
  return total;
}

PowerVectors power_all(const DirectedGraph& g) {
  using detail::BoolMatrix;
  const std::size_t n = g.size();
  const auto adjacency = BoolMatrix::adjacency(g);

  const auto reach = detail::walk_closure(adjacency);
  const auto successors = reach.row_sums();  // |S_i|
  const std::int64_t total = std::accumulate(successors.begin(), successors.end(), std::int64_t{0});
  const auto predecessors = detail::walk_closure(adjacency.transposed()).row_sums();  // |P_i|

  std::int64_t potential = 0;
  for (NodeId v = 0; v < n; ++v)
    potential += successors[v] - static_cast<std::int64_t>(g.out_degree(v));

  PowerVectors result;
  result.normalizer = static_cast<std::uint64_t>(std::max<std::int64_t>(potential, 1));
  result.raw.resize(n);
  result.normalized.resize(n);
  for (NodeId i = 0; i < n; ++i) {
    const auto reduced = detail::walk_closure(adjacency.without(i)).row_sums();
    const std::int64_t reduced_total =
        std::accumulate(reduced.begin(), reduced.end(), std::int64_t{0});
    const std::int64_t np = total - reduced_total - (successors[i] + predecessors[i]);
    if (np < 0) throw std::logic_error("negative brokerage from matrix route");
    result.raw[i] = static_cast<std::uint64_t>(np);
    result.normalized[i] = Rational(np, static_cast<std::int64_t>(result.normalizer));
  }
  return result;
}

std::vector<MiddlemanClass> classify_all(const DirectedGraph& g) {
  using detail::BoolMatrix;
  const std::size_t n = g.size();
  const auto np = power_all(g).raw;

  const auto adjacency = BoolMatrix::adjacency(g);
  const auto undirected = adjacency | adjacency.transposed();
  const auto reach = detail::walk_closure(undirected).row_sums();
  const std::int64_t total = std::accumulate(reach.begin(), reach.end(), std::int64_t{0});

  std::vector<MiddlemanClass> out(n, MiddlemanClass::NonMiddleman);
  for (NodeId i = 0; i < n; ++i) {
    const auto reduced = detail::walk_closure(undirected.without(i)).row_sums();
    const std::int64_t npu =
        total - std::accumulate(reduced.begin(), reduced.end(), std::int64_t{0}) - 2 * reach[i];
    if (np[i] > 0 && npu > 0) out[i] = MiddlemanClass::StrongMiddleman;
    else if (np[i] > 0) out[i] = MiddlemanClass::WeakMiddleman;
  }
  return out;
}

}  // namespace middlemen
