#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "peeling/errors.hpp"
#include "peeling/vertex_set.hpp"

namespace peeling {

/// Unvalidated digraph data, as read from a file or assembled by a family
/// builder. Turned into a ValuedDigraph only after validation.
struct DigraphDescription {
  std::vector<long> theta;
  std::vector<std::string> labels; // empty, or one entry per vertex
  std::vector<std::pair<VertexId, VertexId>> arcs;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
  /// A topological order (sources first) when the arc set is acyclic.
  std::vector<VertexId> topological_order;
};

ValidationReport validate(const DigraphDescription& description);

/// Simple acyclic digraph with an out-degree compatible valuation:
/// 0 <= theta(x) <= d+(x) for every vertex. Immutable once built.
class ValuedDigraph {
public:
  ValuedDigraph() = default;
  /// Throws InvalidDigraph listing every violation.
  explicit ValuedDigraph(const DigraphDescription& description);

  std::size_t size() const { return theta_.size(); }
  std::size_t num_arcs() const { return num_arcs_; }

  bool contains(VertexId v) const { return v < theta_.size(); }
  int theta(VertexId v) const { return theta_[v]; }
  const std::string& label(VertexId v) const { return labels_[v]; }
  std::span<const VertexId> out(VertexId v) const { return out_[v]; }
  std::span<const VertexId> in(VertexId v) const { return in_[v]; }
  const VertexSet& out_set(VertexId v) const { return out_sets_[v]; }
  const std::vector<int>& thetas() const { return theta_; }

  std::optional<VertexId> find_label(const std::string& label) const;

  VertexSet empty_set() const { return VertexSet(size()); }
  VertexSet all_vertices() const;

  DigraphDescription description() const;

  /// Space-separated labels of the members, in ascending id order.
  std::string format_set(const VertexSet& s) const;

private:
  std::vector<int> theta_;
  std::vector<std::string> labels_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::vector<VertexSet> out_sets_;
  std::size_t num_arcs_ = 0;
};

/// A digraph obtained by deleting vertices, with the id each surviving
/// vertex had in the parent digraph.
struct Subdigraph {
  ValuedDigraph graph;
  std::vector<VertexId> origin;
};

/// Member of IS(G). Only obtainable through validation (or from code that
/// already established membership), so holding one is a proof of
/// membership in its digraph.
class InitialSection {
public:
  /// Throws NotInitialSection.
  static InitialSection checked(const ValuedDigraph& g, VertexSet members);
  static InitialSection empty(const ValuedDigraph& g) { return InitialSection(g.empty_set()); }
  static InitialSection full(const ValuedDigraph& g) { return InitialSection(g.all_vertices()); }
  /// Caller guarantees membership.
  static InitialSection assume_valid(VertexSet members) { return InitialSection(std::move(members)); }

  const VertexSet& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(VertexId v) const { return members_.contains(v); }

  friend bool operator==(const InitialSection&, const InitialSection&) = default;
  friend bool operator<(const InitialSection& a, const InitialSection& b) { return a.members_ < b.members_; }

private:
  explicit InitialSection(VertexSet members) : members_(std::move(members)) {}
  VertexSet members_;
};

using PeelingSequence = std::vector<VertexId>;

/// Mutable peeling-process state over a fixed digraph: the set of peeled
/// vertices and the current valuation of the survivors. This is the working
/// representation used by every enumerator; ValuedDigraph values are only
/// materialized on request.
class PeelState {
public:
  explicit PeelState(const ValuedDigraph& g);
  /// State after peeling `a`, with theta_A(x) = theta(x) - |A cap out(x)|.
  /// `a` must be an initial section.
  PeelState(const ValuedDigraph& g, const InitialSection& a);

  const ValuedDigraph& graph() const { return *g_; }
  const VertexSet& peeled() const { return peeled_; }
  int theta(VertexId v) const { return theta_[v]; }

  bool is_erasable(VertexId v) const;
  /// Throws NotErasable.
  void peel(VertexId v);
  /// Inverse of peel(v); v must be the most recent peel.
  void unpeel(VertexId v);

  /// Erasable survivors in ascending id order.
  std::vector<VertexId> erasable() const;

private:
  const ValuedDigraph* g_;
  VertexSet peeled_;
  std::vector<int> theta_;
};

std::size_t out_degree(const ValuedDigraph& g, VertexId v);
bool is_erasable(const ValuedDigraph& g, VertexId v);
Subdigraph peel(const ValuedDigraph& g, VertexId v);

/// Intrinsic membership test: every x in s has theta(x) <= |s cap out(x)|
/// and every x outside s has theta(x) >= |s cap out(x)|.
bool is_initial_section(const ValuedDigraph& g, const VertexSet& s);

/// The valued digraph left after peeling every member of `a`.
Subdigraph residual(const ValuedDigraph& g, const InitialSection& a);

/// Every ordering of `a` realizable by the peeling process, explored with
/// erasable vertices in ascending id order. Throws CapExceeded past `cap`.
std::vector<PeelingSequence> peeling_sequences(const ValuedDigraph& g, const InitialSection& a,
                                               std::size_t cap = 1'000'000);

/// True when `seq` is a realizable peeling sequence (prefix) of g.
bool is_peeling_sequence(const ValuedDigraph& g, std::span<const VertexId> seq);

} // namespace peeling
