#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "middlemen/graph.hpp"
#include "middlemen/rational.hpp"
#include "middlemen/reachability.hpp"

namespace middlemen {

enum class MiddlemanClass { NonMiddleman, WeakMiddleman, StrongMiddleman };

std::string_view to_string(MiddlemanClass cls);

/// M_ij: nodes other than i and j that lie on every directed path from i to
/// j. Empty when j is unreachable from i or when the arc (i, j) exists.
NodeSet pair_middleman_set(const DirectedGraph& g, NodeId from, NodeId to);

/// Ordered pairs (a, b) with `node` in M_ab.
PairSet brokered_pairs(const DirectedGraph& g, NodeId node);

/// M(D), the union of all pair middleman sets.
NodeSet middleman_set(const DirectedGraph& g);

/// Strong when deleting the middleman raises the weakly connected component
/// count, weak otherwise.
MiddlemanClass classify(const DirectedGraph& g, NodeId node);
std::vector<MiddlemanClass> classify(const DirectedGraph& g);

/// b_i from the connectivity differential:
///   sum_j |S_j(D)| - sum_{j != i} |S_j(D - i)| - |S_i(D)| - |P_i(D)|.
std::uint64_t brokerage(const DirectedGraph& g, NodeId node);
std::vector<std::uint64_t> brokerage(const DirectedGraph& g);

struct PotentialBrokerage {
  std::uint64_t raw = 0;         // B': total indirect successors
  std::uint64_t normalizer = 1;  // B = max(B', 1)
};

PotentialBrokerage potential_brokerage(const DirectedGraph& g);

/// nu_i = b_i / B.
Rational middleman_power(const DirectedGraph& g, NodeId node);

/// nu*_h: each brokered pair (i, j) contributes 1 / (d(i,h) * d(h,j)).
double distance_based_power(const DirectedGraph& g, NodeId node);
/// Exact form of distance_based_power; throws std::overflow_error when the
/// common denominator leaves 64 bits.
Rational distance_based_power_exact(const DirectedGraph& g, NodeId node);

/// Output of the adjacency-matrix algorithm.
struct PowerVectors {
  std::vector<std::uint64_t> raw;    // NP
  std::vector<Rational> normalized;  // np
  std::uint64_t normalizer = 1;      // max(B', 1)
};

/// Two-step adjacency-matrix route: accumulate boolean matrix powers into the
/// closure, zero its diagonal, then repeat for every node-deleted matrix.
/// Independent of the set-based operations above and must agree with them.
PowerVectors power_all(const DirectedGraph& g);

/// Matrix-route classification: positive power in D and in the reciprocated
/// graph means strong, positive only in D means weak.
std::vector<MiddlemanClass> classify_all(const DirectedGraph& g);

}  // namespace middlemen
