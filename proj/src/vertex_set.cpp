#include "peeling/vertex_set.hpp"

#include <algorithm>

namespace peeling {

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::span<const VertexId> members)
    : VertexSet(universe) {
  for (VertexId v : members)
    insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
    : VertexSet(universe) {
  for (VertexId v : members)
    insert(v);
}

std::size_t VertexSet::size() const {
  std::size_t count = 0;
  for (std::uint64_t w : words_)
    count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~theirs) != 0)
      return false;
  }
  return true;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
  std::size_t count = 0;
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    count += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return count;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(size());
  for_each([&](VertexId v) { out.push_back(v); });
  return out;
}

std::size_t VertexSet::hash() const {
  // FNV-1a over the words
  std::uint64_t h = 1469598103934665603ull ^ universe_;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

bool operator<(const VertexSet& lhs, const VertexSet& rhs) {
  const auto a = lhs.members();
  const auto b = rhs.members();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace peeling
