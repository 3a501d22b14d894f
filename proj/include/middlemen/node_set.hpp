#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace middlemen {

using NodeId = std::size_t;

/// Fixed-universe bitset over dense node ids [0, universe).
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  NodeSet(std::size_t universe, std::initializer_list<NodeId> ids) : NodeSet(universe) {
    for (NodeId id : ids) insert(id);
  }

  std::size_t universe() const { return universe_; }

  void insert(NodeId id) { words_[id >> 6] |= bit(id); }
  void erase(NodeId id) { words_[id >> 6] &= ~bit(id); }
  bool contains(NodeId id) const {
    return id < universe_ && (words_[id >> 6] & bit(id)) != 0;
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  NodeSet& operator|=(const NodeSet& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  NodeSet& operator&=(const NodeSet& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  /// Removes every member of `other`.
  NodeSet& subtract(const NodeSet& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
    return *this;
  }

  bool is_subset_of(const NodeSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    return true;
  }
  bool intersects(const NodeSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & other.words_[k]) != 0) return true;
    return false;
  }

  /// Members in increasing id order.
  std::vector<NodeId> to_vector() const {
    std::vector<NodeId> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      auto w = words_[k];
      while (w != 0) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

  friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
  friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }

 private:
  static std::uint64_t bit(NodeId id) { return std::uint64_t{1} << (id & 63); }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace middlemen
