#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "middlemen/contestability.hpp"
#include "middlemen/graph.hpp"
#include "middlemen/middleman.hpp"
#include "middlemen/rational.hpp"

namespace middlemen {

inline constexpr const char* kVersion = "0.1.0";

struct AnalysisOptions {
  bool undirected = false;      // arcs were reciprocated before analysis
  bool raw_betweenness = false;
  double beta = 0.2;
  double damping = 0.85;
  bool minimal_sets = false;
};

struct NodeReport {
  NodeId id = 0;
  std::string label;
  NodeRole role = NodeRole::Isolated;
  MiddlemanClass middleman_class = MiddlemanClass::NonMiddleman;
  std::uint64_t brokerage = 0;
  Rational nu;
  double nu_star = 0.0;
  ContestStatus contested = ContestStatus::Vacuous;
  std::size_t degree_in = 0;
  std::size_t degree_out = 0;
  double closeness = 0.0;
  double betweenness = 0.0;
  double bonacich = 0.0;
  double pagerank = 0.0;
  double beta_measure = 0.0;
  std::optional<std::vector<std::vector<NodeId>>> min_contesting_sets;
};

struct AnalysisReport {
  std::size_t n = 0;
  std::size_t arcs = 0;
  bool weakly_connected = false;
  bool strongly_connected = false;
  std::size_t components = 0;
  PotentialBrokerage potential;
  std::vector<NodeReport> nodes;  // input node order
  AnalysisOptions options;
  std::string version = kVersion;
};

/// Runs every measure. Propagates SpectralBoundError for an out-of-range
/// beta and SizeGuardError when minimal sets are requested on too large an
/// instance.
AnalysisReport analyze(const DirectedGraph& g, const AnalysisOptions& options = {});

/// Node indices into report.nodes: descending nu, then descending
/// brokerage, then input order.
std::vector<std::size_t> ranking(const AnalysisReport& report);

nlohmann::json to_json(const AnalysisReport& report);

/// Aligned table in ranking order; weak middlemen are marked (*) and strong
/// ones (**).
std::string render_table(const AnalysisReport& report);

/// Graphviz digraph in node order; middlemen carry class="strong|weak".
std::string render_dot(const DirectedGraph& g);

/// Fixed three-decimal rendering used by all text output.
std::string format_fixed(double value, int decimals = 3);

}  // namespace middlemen
