#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "peeling/digraph.hpp"
#include "peeling/lattice.hpp"

namespace testing {

using namespace peeling;

inline ValuedDigraph make_graph(std::vector<long> theta,
                                std::vector<std::pair<VertexId, VertexId>> arcs,
                                std::vector<std::string> labels = {}) {
  return ValuedDigraph(DigraphDescription{std::move(theta), std::move(labels), std::move(arcs)});
}

/// Initial sections found by replaying every peeling order from scratch,
/// without using the intrinsic membership test.
inline std::set<VertexSet> reachable_sets(const ValuedDigraph& g) {
  std::set<VertexSet> seen;
  PeelState state(g);
  auto rec = [&](auto&& self) -> void {
    if (!seen.insert(state.peeled()).second)
      return;
    for (VertexId v : state.erasable()) {
      state.peel(v);
      self(self);
      state.unpeel(v);
    }
  };
  rec(rec);
  return seen;
}

/// Random simple DAG on k vertices (arcs go from a lower to a higher
/// position of a random order) with theta uniform in [0, d+].
inline ValuedDigraph random_digraph(std::size_t k, double density, std::mt19937_64& rng) {
  std::vector<VertexId> order(k);
  for (std::size_t i = 0; i < k; ++i)
    order[i] = static_cast<VertexId>(i);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(density);
  DigraphDescription d;
  std::vector<long> degree(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (coin(rng)) {
        d.arcs.emplace_back(order[i], order[j]);
        ++degree[order[i]];
      }
  for (std::size_t v = 0; v < k; ++v)
    d.theta.push_back(std::uniform_int_distribution<long>(0, degree[v])(rng));
  return ValuedDigraph(d);
}

inline std::set<VertexSet> element_sets(const ISLattice& lat) {
  std::set<VertexSet> out;
  for (const auto& e : lat.elements())
    out.insert(e.members());
  return out;
}

} // namespace testing
