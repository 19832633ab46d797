#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "peeling/digraph.hpp"

namespace peeling {

using BigInt = boost::multiprecision::cpp_int;

struct BuildOptions {
  /// Stop after this rank; required for infinite families.
  std::optional<std::size_t> max_rank;
  /// Explicit failure (CapExceeded) instead of exhausting memory.
  std::size_t element_cap = 5'000'000;
};

/// (IS(G), inclusion), built layer by layer from the empty set. Element 0 is
/// always the empty set; elements are stored in rank order and, inside a
/// rank, in canonical set order.
class ISLattice {
public:
  ISLattice() = default;

  const ValuedDigraph& graph() const { return g_; }
  std::size_t size() const { return elements_.size(); }
  const InitialSection& element(std::size_t i) const { return elements_[i]; }
  const std::vector<InitialSection>& elements() const { return elements_; }
  std::size_t rank(std::size_t i) const { return elements_[i].size(); }
  std::size_t max_rank() const { return layer_start_.size() - 2; }

  /// Indices of the elements of rank r (empty past the last layer).
  std::vector<std::size_t> layer(std::size_t r) const;
  std::size_t layer_size(std::size_t r) const;

  std::span<const std::size_t> up(std::size_t i) const { return up_[i]; }
  std::span<const std::size_t> down(std::size_t i) const { return down_[i]; }
  std::size_t num_covers() const;

  std::optional<std::size_t> index_of(const VertexSet& s) const;

  /// True when the whole of IS(G) was built (no rank truncation).
  bool bounded() const { return bounded_; }

  friend ISLattice build(const ValuedDigraph& g, const BuildOptions& options);

private:
  ValuedDigraph g_;
  std::vector<InitialSection> elements_;
  std::vector<std::size_t> layer_start_; // layer r is [layer_start_[r], layer_start_[r+1])
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::unordered_map<VertexSet, std::size_t> index_;
  bool bounded_ = true;
};

/// Throws CapExceeded when more than options.element_cap elements appear.
ISLattice build(const ValuedDigraph& g, const BuildOptions& options = {});

/// Greatest lower bound: intersect everything, then peel erasable vertices
/// of the intersection for as long as possible.
InitialSection meet(const ValuedDigraph& g, std::span<const InitialSection> s);
InitialSection meet(const ValuedDigraph& g, const InitialSection& a, const InitialSection& b);

/// Largest common lower bound found by scanning the lattice; used as a
/// reference for meet().
InitialSection meet_bruteforce(const ISLattice& lattice, std::span<const InitialSection> s);

/// Meet of the common upper bounds present in the lattice. Throws
/// JoinUnavailable when the lattice holds no common upper bound.
InitialSection join(const ISLattice& lattice, std::span<const InitialSection> s);
InitialSection join(const ISLattice& lattice, const InitialSection& a, const InitialSection& b);

struct MoebiusWitness {
  VertexSet n_set; // members with theta = 0
  VertexSet f_set; // members whose removal leaves an initial section
  int value() const;
};

MoebiusWitness moebius_witness(const ValuedDigraph& g, const InitialSection& a);
/// mu(empty, a).
int moebius(const ValuedDigraph& g, const InitialSection& a);
/// mu(b, a) for b contained in a: the formula applied to a \ b inside the
/// residual digraph left after peeling b.
int moebius(const ValuedDigraph& g, const InitialSection& b, const InitialSection& a);

/// Elements of the interval [b, a], in rank order. Throws CapExceeded.
std::vector<InitialSection> interval_elements(const ValuedDigraph& g, const InitialSection& b,
                                              const InitialSection& a,
                                              std::size_t cap = 200'000);

/// Möbius function from the recursive definition over the interval.
int moebius_oracle(const ValuedDigraph& g, const InitialSection& a, std::size_t cap = 200'000);
int moebius_oracle(const ValuedDigraph& g, const InitialSection& b, const InitialSection& a,
                   std::size_t cap = 200'000);

/// Number of maximal chains of [empty, a], i.e. of peeling sequences of a.
/// Memoized over subsets; throws CapExceeded past `cap` memo entries.
BigInt maximal_chain_count(const ValuedDigraph& g, const InitialSection& a,
                           std::size_t cap = 5'000'000);

/// Hasse diagram, one DOT rank per lattice rank.
std::string to_dot(const ISLattice& lattice);
/// {"elements":[[labels...]...], "ranks":[...], "covers":[[i,j]...], "moebius":[...]}
nlohmann::json to_json(const ISLattice& lattice, bool with_moebius = true);

} // namespace peeling
