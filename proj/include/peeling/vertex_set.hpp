#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace peeling {

/// Dense 0-based vertex index inside one ValuedDigraph.
using VertexId = std::uint32_t;

/// Fixed-universe bitset of vertex ids. Equality is set equality; the order
/// operator is lexicographic on sorted member lists, which gives the
/// canonical ordering used everywhere for deterministic output.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::span<const VertexId> members);
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members);

  std::size_t universe() const { return universe_; }

  bool contains(VertexId v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
  }
  void insert(VertexId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(VertexId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const;
  bool empty() const;

  bool is_subset_of(const VertexSet& other) const;
  std::size_t intersection_size(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator&(VertexSet lhs, const VertexSet& rhs) { return lhs &= rhs; }
  friend VertexSet operator|(VertexSet lhs, const VertexSet& rhs) { return lhs |= rhs; }
  friend VertexSet operator-(VertexSet lhs, const VertexSet& rhs) { return lhs -= rhs; }

  /// Members in ascending order.
  std::vector<VertexId> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const;

  friend bool operator==(const VertexSet& lhs, const VertexSet& rhs) {
    return lhs.universe_ == rhs.universe_ && lhs.words_ == rhs.words_;
  }
  friend bool operator<(const VertexSet& lhs, const VertexSet& rhs);

private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace peeling

template <>
struct std::hash<peeling::VertexSet> {
  std::size_t operator()(const peeling::VertexSet& s) const { return s.hash(); }
};
