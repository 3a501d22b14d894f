#pragma once

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "middlemen/graph.hpp"
#include "middlemen/reachability.hpp"

namespace middlemen {

/// Raised when an exhaustive search would exceed its candidate budget.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ContestResult {
  bool contested = false;
  /// Coverage of the contested node is empty (sources, sinks, isolated
  /// nodes), so any set contests it.
  bool vacuous = false;
  NodeSet contesting_set;
  /// Coverage pairs left uncovered; empty iff contested.
  PairSet uncovered;
};

/// Whether `contenders` contests `node`: every coverage pair (a, b) of the
/// node must satisfy a in P_j(D - node) + {j} and b in S_j(D - node) for
/// some contender j.
ContestResult contests(const DirectedGraph& g, const NodeSet& contenders, NodeId node);

/// P_i(D) within P_j(D - i) + {j} and S_i(D) within S_j(D - i) + {j}.
bool directly_contests(const DirectedGraph& g, NodeId contender, NodeId node);

enum class ContestStatus { Contested, Uncontested, Vacuous };

std::string_view to_string(ContestStatus status);

/// Contesting is monotone in the contender set, so testing N \ {i} decides
/// whether any contesting set exists.
ContestStatus contest_status(const DirectedGraph& g, NodeId node);
bool is_contested(const DirectedGraph& g, NodeId node);

inline constexpr std::size_t kMinimalSearchCandidates = 20;

/// Every contesting set of minimum cardinality, each as a sorted id list,
/// ordered lexicographically. Empty when the node is uncontested; a single
/// empty set when its coverage is empty. Only nodes that cover at least one
/// coverage pair are candidates; more than `max_candidates` of them raises
/// SizeGuardError.
std::vector<std::vector<NodeId>> minimal_contesting_sets(
    const DirectedGraph& g, NodeId node, std::size_t max_candidates = kMinimalSearchCandidates);

struct DualityAudit {
  std::vector<NodeId> intermediaries;
  /// Intermediaries where "uncontested" and "middleman" disagree.
  std::vector<NodeId> counterexamples;
  bool passed() const { return counterexamples.empty(); }
};

DualityAudit duality_audit(const DirectedGraph& g);

}  // namespace middlemen
