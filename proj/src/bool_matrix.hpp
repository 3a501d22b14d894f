#pragma once

#include <cstdint>
#include <vector>

#include "middlemen/graph.hpp"

namespace middlemen::detail {

/// Dense n x n boolean matrix stored as bitset rows.
class BoolMatrix {
 public:
  explicit BoolMatrix(std::size_t n) : rows_(n, NodeSet(n)) {}

  static BoolMatrix adjacency(const DirectedGraph& g) {
    BoolMatrix m(g.size());
    for (auto [from, to] : g.arcs()) m.rows_[from].insert(to);
    return m;
  }

  std::size_t size() const { return rows_.size(); }
  const NodeSet& row(std::size_t r) const { return rows_[r]; }
  void set(std::size_t r, std::size_t c) { rows_[r].insert(c); }

  BoolMatrix transposed() const {
    BoolMatrix t(size());
    for (std::size_t r = 0; r < size(); ++r)
      for (auto c : rows_[r].to_vector()) t.rows_[c].insert(r);
    return t;
  }

  BoolMatrix operator|(const BoolMatrix& other) const {
    BoolMatrix out = *this;
    for (std::size_t r = 0; r < size(); ++r) out.rows_[r] |= other.rows_[r];
    return out;
  }

  /// Logical product: row r of the result is the union of other's rows k
  /// over every set entry (r, k) of this matrix.
  BoolMatrix operator*(const BoolMatrix& other) const {
    BoolMatrix out(size());
    for (std::size_t r = 0; r < size(); ++r)
      for (auto k : rows_[r].to_vector()) out.rows_[r] |= other.rows_[k];
    return out;
  }

  /// Zeroes row and column `node`.
  BoolMatrix without(std::size_t node) const {
    BoolMatrix out = *this;
    out.rows_[node] = NodeSet(size());
    for (auto& row : out.rows_) row.erase(node);
    return out;
  }

  void clear_diagonal() {
    for (std::size_t r = 0; r < size(); ++r) rows_[r].erase(r);
  }

  std::vector<std::int64_t> row_sums() const {
    std::vector<std::int64_t> sums;
    sums.reserve(size());
    for (const auto& row : rows_) sums.push_back(static_cast<std::int64_t>(row.count()));
    return sums;
  }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::vector<NodeSet> rows_;
};

/// OR of the logical powers A, A^2, ..., A^n with the diagonal cleared.
/// Accumulated by doubling (R <- R | R*R covers walks up to twice the
/// length), stopping once nothing new appears.
inline BoolMatrix walk_closure(const BoolMatrix& adjacency) {
  BoolMatrix acc = adjacency;
  for (;;) {
    BoolMatrix next = acc | (acc * acc);
    if (next == acc) break;
    acc = std::move(next);
  }
  acc.clear_diagonal();
  return acc;
}

}  // namespace middlemen::detail
