#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "peeling/digraph.hpp"

namespace peeling {

/// Finite poset on 0..k-1, stored as its full order relation.
class FinitePoset {
public:
  FinitePoset() = default;
  /// `relations` are pairs x <= y. With `close`, the reflexive-transitive
  /// closure is taken first (for cover lists); otherwise the relation must
  /// already be transitive. Reflexive pairs are always implied. Throws
  /// InvalidArgument for cycles or non-transitive input.
  FinitePoset(std::size_t k, const std::vector<std::pair<std::size_t, std::size_t>>& relations,
              bool close = false, std::vector<std::string> labels = {});

  std::size_t size() const { return leq_.size(); }
  bool leq(std::size_t x, std::size_t y) const { return leq_[x][y]; }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq_[x][y]; }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

private:
  std::vector<std::vector<bool>> leq_;
  std::vector<std::string> labels_;
};

/// Format: `poset <k>`, `element <id> [label]`, `rel <x> <y>` (x <= y),
/// '#' comments. Element lines are optional. Throws ParseError.
FinitePoset read_poset(std::istream& in, bool covers_only);
FinitePoset read_poset_file(const std::string& path, bool covers_only);

/// Arc x -> y for every x < y; theta = 0. Initial sections are lower sets.
ValuedDigraph build_downset(const FinitePoset& p);
/// Same arcs with theta = out-degree. Initial sections are upper sets.
ValuedDigraph build_upset(const FinitePoset& p);

/// All orderings compatible with the order, by filtering every ordering.
std::vector<std::vector<VertexId>> linear_extensions(const FinitePoset& p);

bool is_lower_set(const FinitePoset& p, const VertexSet& s);
bool is_upper_set(const FinitePoset& p, const VertexSet& s);
/// Brute force over all subsets.
std::vector<VertexSet> lower_sets(const FinitePoset& p);

/// Random poset: a random DAG over a shuffled order, then closed.
FinitePoset random_poset(std::size_t k, double density, std::uint64_t seed);

} // namespace peeling
