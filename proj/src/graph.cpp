#include "middlemen/graph.hpp"

#include <algorithm>
#include <sstream>

namespace middlemen {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) labels.push_back(std::to_string(k));
  return labels;
}

}  // namespace

DirectedGraph::DirectedGraph(std::vector<std::string> labels, std::vector<Arc> arcs)
    : labels_(std::move(labels)), out_(labels_.size()), in_(labels_.size()) {
  const std::size_t n = labels_.size();
  index_.reserve(n);
  for (NodeId id = 0; id < n; ++id) {
    if (!index_.emplace(labels_[id], id).second)
      throw GraphError("duplicate node label '" + labels_[id] + "'");
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  for (auto [from, to] : arcs) {
    if (from >= n || to >= n) throw GraphError("arc endpoint out of range");
    if (from == to)
      throw GraphError("self-loop on node '" + labels_[from] + "' is not allowed");
    out_[from].push_back(to);
    in_[to].push_back(from);
  }
  // Arcs were sorted by (from, to), so out_ lists are sorted; in_ lists are
  // filled in increasing `from` order and need no sort either.
  arc_count_ = arcs.size();
}

std::optional<NodeId> DirectedGraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId DirectedGraph::id(std::string_view label) const {
  if (auto found = find(label)) return *found;
  throw UnknownNodeError(label);
}

bool DirectedGraph::has_arc(NodeId from, NodeId to) const {
  const auto& succ = out_.at(from);
  return std::binary_search(succ.begin(), succ.end(), to);
}

std::vector<Arc> DirectedGraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (NodeId from = 0; from < out_.size(); ++from)
    for (NodeId to : out_[from]) out.emplace_back(from, to);
  return out;
}

bool DirectedGraph::is_symmetric() const {
  for (NodeId from = 0; from < out_.size(); ++from)
    for (NodeId to : out_[from])
      if (!has_arc(to, from)) return false;
  return true;
}

std::string_view to_string(NodeRole role) {
  switch (role) {
    case NodeRole::Source: return "source";
    case NodeRole::Sink: return "sink";
    case NodeRole::Intermediary: return "intermediary";
    case NodeRole::Isolated: return "isolated";
  }
  return "unknown";
}

DirectedGraph parse_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> index;
  std::vector<Arc> arcs;
  auto intern = [&](std::string_view label) {
    auto [it, inserted] = index.emplace(std::string(label), labels.size());
    if (inserted) labels.emplace_back(label);
    return it->second;
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line = trim(line.substr(3));
    if (line.empty() || line.front() == '#') continue;

    auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos)
      throw ParseError(line_no, "expected exactly two fields 'source,target'");
    auto source = trim(line.substr(0, comma));
    auto target = trim(line.substr(comma + 1));
    if (source.empty() || target.empty()) throw ParseError(line_no, "empty node label");
    if (source == target)
      throw ParseError(line_no, "self-loop '" + std::string(source) + "' is not allowed");
    NodeId from = intern(source);
    NodeId to = intern(target);
    arcs.emplace_back(from, to);
  }
  return DirectedGraph(std::move(labels), std::move(arcs));
}

DirectedGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

DirectedGraph parse_adjacency_matrix(std::istream& in, std::vector<std::string> labels) {
  std::vector<std::vector<int>> matrix;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::string cleaned(line);
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream tokens(cleaned);
    std::vector<int> row;
    std::string token;
    while (tokens >> token) {
      if (token == "0") {
        row.push_back(0);
      } else if (token == "1") {
        row.push_back(1);
      } else {
        throw ParseError(line_no, "matrix entry '" + token + "' is not 0 or 1");
      }
    }
    matrix.push_back(std::move(row));
  }
  return from_adjacency_matrix(matrix, std::move(labels));
}

DirectedGraph from_adjacency_matrix(const std::vector<std::vector<int>>& matrix,
                                    std::vector<std::string> labels) {
  const std::size_t n = matrix.size();
  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n) throw GraphError("label count does not match matrix size");
  std::vector<Arc> arcs;
  for (std::size_t r = 0; r < n; ++r) {
    if (matrix[r].size() != n)
      throw ParseError(r + 1, "matrix is not square (" + std::to_string(matrix[r].size()) +
                                  " entries, expected " + std::to_string(n) + ")");
    for (std::size_t c = 0; c < n; ++c) {
      int v = matrix[r][c];
      if (v != 0 && v != 1) throw ParseError(r + 1, "matrix entry is not 0 or 1");
      if (v == 1 && r == c) throw ParseError(r + 1, "nonzero diagonal entry (self-loop)");
      if (v == 1) arcs.emplace_back(r, c);
    }
  }
  return DirectedGraph(std::move(labels), std::move(arcs));
}

DirectedGraph remove_node(const DirectedGraph& g, NodeId node) {
  if (node >= g.size()) throw GraphError("node id out of range");
  auto shift = [node](NodeId id) { return id > node ? id - 1 : id; };
  std::vector<std::string> labels;
  labels.reserve(g.size() - 1);
  for (NodeId id = 0; id < g.size(); ++id)
    if (id != node) labels.push_back(g.label(id));
  std::vector<Arc> arcs;
  for (auto [from, to] : g.arcs())
    if (from != node && to != node) arcs.emplace_back(shift(from), shift(to));
  return DirectedGraph(std::move(labels), std::move(arcs));
}

DirectedGraph underlying_undirected(const DirectedGraph& g) {
  auto arcs = g.arcs();
  const std::size_t m = arcs.size();
  for (std::size_t k = 0; k < m; ++k) arcs.emplace_back(arcs[k].second, arcs[k].first);
  return DirectedGraph(g.labels(), std::move(arcs));
}

Neighborhood neighborhood(const DirectedGraph& g, NodeId node) {
  Neighborhood nb{NodeSet(g.size()), NodeSet(g.size()), g.out_degree(node), g.in_degree(node)};
  for (NodeId s : g.successors(node)) nb.successors.insert(s);
  for (NodeId p : g.predecessors(node)) nb.predecessors.insert(p);
  return nb;
}

NodeRole node_role(const DirectedGraph& g, NodeId node) {
  const bool has_in = g.in_degree(node) > 0;
  const bool has_out = g.out_degree(node) > 0;
  if (has_in && has_out) return NodeRole::Intermediary;
  if (has_out) return NodeRole::Source;
  if (has_in) return NodeRole::Sink;
  return NodeRole::Isolated;
}

}  // namespace middlemen
