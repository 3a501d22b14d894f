#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "middlemen/fixtures.hpp"
#include "middlemen/graph.hpp"

namespace middlemen::testing {

inline DirectedGraph load(const char* name) { return *fixture(name); }

inline NodeSet set_of(const DirectedGraph& g, std::initializer_list<const char*> labels) {
  NodeSet out(g.size());
  for (const char* label : labels) out.insert(g.id(label));
  return out;
}

inline std::set<std::string> labels_of(const DirectedGraph& g, const NodeSet& set) {
  std::set<std::string> out;
  for (NodeId v : set.to_vector()) out.insert(g.label(v));
  return out;
}

inline std::set<std::string> labels_of(const DirectedGraph& g, const std::vector<NodeId>& ids) {
  std::set<std::string> out;
  for (NodeId v : ids) out.insert(g.label(v));
  return out;
}

inline std::vector<NodeId> ids_of(const DirectedGraph& g, std::initializer_list<const char*> labels) {
  std::vector<NodeId> out;
  for (const char* label : labels) out.push_back(g.id(label));
  return out;
}

/// Graph on labels "1".."n" from 1-based arcs.
inline DirectedGraph numbered(std::size_t n, std::initializer_list<std::pair<int, int>> arcs) {
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= n; ++k) labels.push_back(std::to_string(k));
  std::vector<Arc> ids;
  for (auto [a, b] : arcs) ids.emplace_back(NodeId(a - 1), NodeId(b - 1));
  return DirectedGraph(labels, ids);
}

}  // namespace middlemen::testing
