#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "peeling/type_a.hpp"

using namespace peeling;

TEST_CASE("staircase digraph") {
  const auto a2 = build_a(2);
  CHECK(a2.size() == 1);
  CHECK(a2.graph().theta(0) == 0);
  CHECK(a2.graph().num_arcs() == 0);

  const auto a3 = build_a(3);
  CHECK(a3.boxes() == std::vector<Box>{{1, 2}, {2, 3}, {1, 3}});
  CHECK(a3.graph().theta(a3.id({1, 3})) == 1);
  CHECK(a3.graph().theta(a3.id({1, 2})) == 0);
  CHECK(a3.graph().theta(a3.id({2, 3})) == 0);
  const auto out = a3.graph().out(a3.id({1, 3}));
  CHECK(std::vector<VertexId>(out.begin(), out.end()) ==
        std::vector<VertexId>{a3.id({1, 2}), a3.id({2, 3})});

  CHECK(build_a(5).graph().theta(build_a(5).id({1, 5})) == 3);
  CHECK_THROWS_AS(build_a(0), InvalidArgument);
}

TEST_CASE("inversion sets") {
  CHECK(inversion_set(Permutation::identity(4)).empty());
  CHECK(inversion_set(Permutation({2, 1, 3})) == std::vector<Box>{{1, 2}});
  CHECK(inversion_set(Permutation({3, 2, 1})) == std::vector<Box>{{1, 2}, {1, 3}, {2, 3}});
  for (const auto& p : all_permutations(5))
    CHECK(inversion_set(p).size() == length(p));
}

TEST_CASE("permutation from inversions") {
  CHECK(permutation_from_inversions(3, {}) == Permutation::identity(3));
  const std::vector<Box> s{{1, 3}, {2, 3}};
  CHECK(permutation_from_inversions(3, s) == Permutation({3, 1, 2}));
  const std::vector<Box> bad{{1, 2}, {2, 3}};
  CHECK_THROWS_WITH_AS(permutation_from_inversions(3, bad), "not an inversion set",
                       NotInitialSection);
  for (const auto& p : all_permutations(5))
    CHECK(permutation_from_inversions(5, inversion_set(p)) == p);
}

TEST_CASE("d_sigma and adjacency") {
  const auto id3 = Permutation::identity(3);
  CHECK(d_sigma(id3, {1, 3}) == 1);
  CHECK(d_sigma(Permutation({2, 1, 3}), {1, 3}) == 0);
  CHECK(d_sigma(Permutation::identity(6), {1, 6}) == 4);
  CHECK_THROWS_AS(d_sigma(Permutation({2, 1, 3}), {1, 2}), InvalidArgument);

  CHECK(adjacent(id3, 1, 2));
  CHECK_FALSE(adjacent(id3, 1, 3));
  CHECK(adjacent(Permutation({2, 1, 3}), 1, 3));
}

TEST_CASE("window notation") {
  CHECK(format(parse_permutation("3,1,2")) == "3,1,2");
  CHECK_THROWS_AS(parse_permutation("3,1,1"), InvalidArgument);
  CHECK_THROWS_AS(parse_permutation("3,x,1"), InvalidArgument);
  const Permutation p({2, 3, 1});
  CHECK(p * p.inverse() == Permutation::identity(3));
  CHECK(p.times_s(1) == Permutation({3, 2, 1}));
}

TEST_CASE("theta after peeling is d_sigma, erasable means adjacent") {
  for (int n = 2; n <= 5; ++n) {
    const auto diagram = build_a(n);
    const auto& g = diagram.graph();
    for (const auto& p : all_permutations(n)) {
      const auto a = InitialSection::checked(g, inversion_vertex_set(diagram, p));
      const PeelState state(g, a);
      for (std::size_t v = 0; v < g.size(); ++v) {
        const auto id = static_cast<VertexId>(v);
        if (a.contains(id))
          continue;
        const Box& c = diagram.box(id);
        CHECK(state.theta(id) == d_sigma(p, c));
        CHECK(state.is_erasable(id) ==
              adjacent(p, static_cast<int>(c.a), static_cast<int>(c.b)));
      }
    }
  }
}

TEST_CASE("initial sections are the inversion sets, ordered like the weak order") {
  for (int n = 2; n <= 5; ++n) {
    const auto diagram = build_a(n);
    const ISLattice lat = build(diagram.graph());
    const auto ball = weak_order_a(n);
    REQUIRE(lat.size() == ball.elements.size());

    std::set<VertexSet> expected;
    for (const auto& p : ball.elements)
      expected.insert(inversion_vertex_set(diagram, p));
    CHECK(testing::element_sets(lat) == expected);

    std::set<std::pair<VertexSet, VertexSet>> bfs_covers, lattice_covers;
    for (const auto& [lo, hi] : ball.covers)
      bfs_covers.emplace(inversion_vertex_set(diagram, ball.elements[lo]),
                         inversion_vertex_set(diagram, ball.elements[hi]));
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j : lat.up(i))
        lattice_covers.emplace(lat.element(i).members(), lat.element(j).members());
    CHECK(bfs_covers == lattice_covers);
  }
  CHECK(build(build_a(6).graph()).size() == 720);
}
