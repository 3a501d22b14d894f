#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "middlemen/node_set.hpp"

namespace middlemen {

using Arc = std::pair<NodeId, NodeId>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list or matrix input. `line()` is 1-based, 0 when unknown.
class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UnknownNodeError : public GraphError {
 public:
  explicit UnknownNodeError(std::string_view label)
      : GraphError("unknown node '" + std::string(label) + "'") {}
};

/// Immutable node-labelled simple digraph (no loops, no parallel arcs).
///
/// Nodes carry text labels in input order; algorithms address them through
/// dense ids 0..n-1 that follow that same order.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Throws GraphError on a self-loop, an out-of-range endpoint or a
  /// duplicate label. Duplicate arcs collapse.
  DirectedGraph(std::vector<std::string> labels, std::vector<Arc> arcs);

  std::size_t size() const { return labels_.size(); }
  std::size_t arc_count() const { return arc_count_; }

  const std::string& label(NodeId id) const { return labels_.at(id); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;
  /// Like find() but throws UnknownNodeError.
  NodeId id(std::string_view label) const;

  std::span<const NodeId> successors(NodeId id) const { return out_.at(id); }
  std::span<const NodeId> predecessors(NodeId id) const { return in_.at(id); }
  std::size_t out_degree(NodeId id) const { return out_.at(id).size(); }
  std::size_t in_degree(NodeId id) const { return in_.at(id).size(); }
  bool has_arc(NodeId from, NodeId to) const;

  /// All arcs ordered by (source id, target id).
  std::vector<Arc> arcs() const;

  /// True when every arc is reciprocated.
  bool is_symmetric() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  std::size_t arc_count_ = 0;
};

enum class NodeRole { Source, Sink, Intermediary, Isolated };

std::string_view to_string(NodeRole role);

struct Neighborhood {
  NodeSet successors;
  NodeSet predecessors;
  std::size_t out_degree = 0;
  std::size_t in_degree = 0;
};

/// Lines of `source,target`; '#' starts a comment line, blank lines are skipped.
DirectedGraph parse_edge_list(std::istream& in);
DirectedGraph parse_edge_list(std::string_view text);

/// n lines of n 0/1 tokens separated by whitespace or commas.
DirectedGraph parse_adjacency_matrix(std::istream& in,
                                     std::vector<std::string> labels = {});
DirectedGraph from_adjacency_matrix(const std::vector<std::vector<int>>& matrix,
                                    std::vector<std::string> labels = {});

/// The graph with `node` and every arc touching it deleted.
DirectedGraph remove_node(const DirectedGraph& g, NodeId node);

/// Closes the arc set under reversal.
DirectedGraph underlying_undirected(const DirectedGraph& g);

Neighborhood neighborhood(const DirectedGraph& g, NodeId node);
NodeRole node_role(const DirectedGraph& g, NodeId node);

}  // namespace middlemen
