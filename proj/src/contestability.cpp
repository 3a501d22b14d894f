#include "middlemen/contestability.hpp"

#include <string>

#include "middlemen/middleman.hpp"

namespace middlemen {

namespace {

void check_node(const DirectedGraph& g, NodeId node) {
  if (node >= g.size()) throw GraphError("node id out of range");
}

/// Closures of D - node in both directions.
struct RemovedView {
  std::vector<NodeSet> successors;
  std::vector<NodeSet> predecessors;

  RemovedView(const DirectedGraph& g, NodeId node)
      : successors(reachability_closure(g, Direction::Forward, node)),
        predecessors(reachability_closure(g, Direction::Backward, node)) {}

  bool covers(NodeId contender, NodeId a, NodeId b) const {
    return (a == contender || predecessors[contender].contains(a)) &&
           successors[contender].contains(b);
  }
};

}  // namespace

ContestResult contests(const DirectedGraph& g, const NodeSet& contenders, NodeId node) {
  check_node(g, node);
  if (contenders.universe() != g.size())
    throw GraphError("contender set does not match the graph size");
  if (contenders.contains(node))
    throw GraphError("node '" + g.label(node) + "' cannot contest itself");

  ContestResult result;
  result.contesting_set = contenders;
  const auto pairs = coverage(g, node);
  result.vacuous = pairs.empty();
  if (!result.vacuous) {
    const RemovedView view(g, node);
    const auto members = contenders.to_vector();
    for (auto [a, b] : pairs) {
      bool covered = false;
      for (NodeId j : members) {
        if (view.covers(j, a, b)) {
          covered = true;
          break;
        }
      }
      if (!covered) result.uncovered.emplace_back(a, b);
    }
  }
  result.contested = result.uncovered.empty();
  return result;
}

bool directly_contests(const DirectedGraph& g, NodeId contender, NodeId node) {
  check_node(g, contender);
  check_node(g, node);
  if (contender == node) throw GraphError("a node cannot contest itself");
  const RemovedView view(g, node);
  NodeSet pred_cover = view.predecessors[contender];
  pred_cover.insert(contender);
  NodeSet succ_cover = view.successors[contender];
  succ_cover.insert(contender);
  return predecessor_set(g, node).is_subset_of(pred_cover) &&
         successor_set(g, node).is_subset_of(succ_cover);
}

std::string_view to_string(ContestStatus status) {
  switch (status) {
    case ContestStatus::Contested: return "contested";
    case ContestStatus::Uncontested: return "uncontested";
    case ContestStatus::Vacuous: return "vacuous";
  }
  return "unknown";
}

ContestStatus contest_status(const DirectedGraph& g, NodeId node) {
  check_node(g, node);
  NodeSet everyone(g.size());
  for (NodeId v = 0; v < g.size(); ++v)
    if (v != node) everyone.insert(v);
  auto result = contests(g, everyone, node);
  if (result.vacuous) return ContestStatus::Vacuous;
  return result.contested ? ContestStatus::Contested : ContestStatus::Uncontested;
}

bool is_contested(const DirectedGraph& g, NodeId node) {
  return contest_status(g, node) != ContestStatus::Uncontested;
}

std::vector<std::vector<NodeId>> minimal_contesting_sets(const DirectedGraph& g, NodeId node,
                                                         std::size_t max_candidates) {
  check_node(g, node);
  const auto pairs = coverage(g, node);
  if (pairs.empty()) return {{}};

  // Pair-index bitsets: which coverage pairs each contender covers.
  const RemovedView view(g, node);
  const NodeSet nothing(pairs.size());
  NodeSet all_pairs(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) all_pairs.insert(k);

  std::vector<NodeId> candidates;
  std::vector<NodeSet> covers;
  NodeSet reachable_cover(pairs.size());
  for (NodeId j = 0; j < g.size(); ++j) {
    if (j == node) continue;
    NodeSet cover(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (view.covers(j, pairs[k].first, pairs[k].second)) cover.insert(k);
    if (cover == nothing) continue;
    reachable_cover |= cover;
    candidates.push_back(j);
    covers.push_back(std::move(cover));
  }
  if (reachable_cover != all_pairs) return {};
  if (candidates.size() > max_candidates)
    throw SizeGuardError("minimal contesting set search over " +
                         std::to_string(candidates.size()) + " candidates exceeds the limit of " +
                         std::to_string(max_candidates));

  std::vector<std::vector<NodeId>> found;
  const std::size_t m = candidates.size();
  std::vector<std::size_t> pick;
  for (std::size_t size = 1; size <= m && found.empty(); ++size) {
    pick.resize(size);
    for (std::size_t k = 0; k < size; ++k) pick[k] = k;
    for (;;) {
      NodeSet united(pairs.size());
      for (auto k : pick) united |= covers[k];
      if (united == all_pairs) {
        std::vector<NodeId> set;
        for (auto k : pick) set.push_back(candidates[k]);
        found.push_back(std::move(set));
      }
      // Next combination in lexicographic order.
      std::size_t pos = size;
      while (pos > 0 && pick[pos - 1] == m - size + pos - 1) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t k = pos; k < size; ++k) pick[k] = pick[k - 1] + 1;
    }
  }
  return found;
}

DualityAudit duality_audit(const DirectedGraph& g) {
  DualityAudit audit;
  const auto middlemen_found = middleman_set(g);
  for (NodeId v = 0; v < g.size(); ++v) {
    if (node_role(g, v) != NodeRole::Intermediary) continue;
    audit.intermediaries.push_back(v);
    const bool uncontested = contest_status(g, v) == ContestStatus::Uncontested;
    if (uncontested != middlemen_found.contains(v)) audit.counterexamples.push_back(v);
  }
  return audit;
}

}  // namespace middlemen
