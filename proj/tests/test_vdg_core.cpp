#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "peeling/io.hpp"
#include "peeling/type_a.hpp"
#include "peeling/type_b.hpp"

using namespace peeling;
using testing::make_graph;

TEST_CASE("validate reports each broken invariant") {
  CHECK(validate({{0}, {}, {}}).valid);
  CHECK(validate({{0}, {}, {}}).topological_order == std::vector<VertexId>{0});

  const auto cycle = validate({{0, 0}, {}, {{0, 1}, {1, 0}}});
  CHECK_FALSE(cycle.valid);
  CHECK(cycle.violations.at(0).find("cycle") != std::string::npos);

  const auto too_big = validate({{2, 0}, {}, {{0, 1}}});
  CHECK_FALSE(too_big.valid);
  CHECK(too_big.violations.at(0).find("theta(0)=2") != std::string::npos);

  CHECK_FALSE(validate({{0, 0}, {}, {{0, 1}, {0, 1}}}).valid);
  CHECK_FALSE(validate({{0}, {}, {{0, 0}}}).valid);
  CHECK_FALSE(validate({{0}, {}, {{0, 3}}}).valid);
  CHECK_THROWS_AS(ValuedDigraph(DigraphDescription{{-1}, {}, {}}), InvalidDigraph);
}

TEST_CASE("out-degree on the small diagrams") {
  const auto isolated = make_graph({0}, {});
  CHECK(out_degree(isolated, 0) == 0);
  CHECK_THROWS_AS(out_degree(isolated, 1), UnknownVertex);

  const auto a3 = build_a(3);
  CHECK(out_degree(a3.graph(), a3.id({1, 3})) == 2);
  const auto b2 = build_b(2);
  CHECK(out_degree(b2.graph(), b2.id({-2, 2})) == 2);
  std::vector<Box> targets;
  for (VertexId v : b2.graph().out(b2.id({-2, 2})))
    targets.push_back(b2.box(v));
  CHECK(targets == std::vector<Box>{{-1, 2}, {1, 2}});
}

TEST_CASE("erasability needs theta 0 and busy in-neighbors") {
  const auto g1 = make_graph({1, 0}, {{0, 1}});
  CHECK(is_erasable(g1, 1));
  CHECK_FALSE(is_erasable(g1, 0));
  const auto g2 = make_graph({0, 0}, {{0, 1}});
  CHECK(is_erasable(g2, 0));
  CHECK_FALSE(is_erasable(g2, 1));
  CHECK(is_erasable(make_graph({0}, {}), 0));
  CHECK_THROWS_AS(is_erasable(g2, 7), UnknownVertex);
}

TEST_CASE("peel decrements in-neighbors only") {
  const auto g1 = make_graph({1, 0}, {{0, 1}}, {"x", "y"});
  const Subdigraph r1 = peel(g1, 1);
  REQUIRE(r1.graph.size() == 1);
  CHECK(r1.graph.theta(0) == 0);
  CHECK(r1.graph.label(0) == "x");
  CHECK(r1.origin == std::vector<VertexId>{0});

  const auto g2 = make_graph({0, 0}, {{0, 1}}, {"x", "y"});
  const Subdigraph r2 = peel(g2, 0);
  REQUIRE(r2.graph.size() == 1);
  CHECK(r2.graph.theta(0) == 0);
  CHECK(r2.graph.label(0) == "y");

  CHECK(peel(make_graph({0}, {}), 0).graph.size() == 0);
  CHECK_THROWS_AS(peel(g1, 0), NotErasable);
}

TEST_CASE("residual on the staircase") {
  const auto a3 = build_a(3);
  const auto& g = a3.graph();
  const Subdigraph same = residual(g, InitialSection::empty(g));
  CHECK(same.graph.thetas() == g.thetas());

  const auto a = InitialSection::checked(g, a3.to_set(std::vector<Box>{{1, 2}}));
  const Subdigraph r = residual(g, a);
  const auto sigma = Permutation({2, 1, 3});
  for (std::size_t i = 0; i < r.origin.size(); ++i) {
    const Box& c = a3.box(r.origin[i]);
    CHECK(r.graph.theta(static_cast<VertexId>(i)) == 0);
    CHECK(r.graph.theta(static_cast<VertexId>(i)) == d_sigma(sigma, c));
  }
  CHECK_THROWS_AS(residual(g, InitialSection::assume_valid(a3.to_set(std::vector<Box>{{1, 3}}))),
                  NotInitialSection);
}

TEST_CASE("membership test on the staircase") {
  const auto a3 = build_a(3);
  const auto& g = a3.graph();
  CHECK(is_initial_section(g, g.empty_set()));
  CHECK_FALSE(is_initial_section(g, a3.to_set(std::vector<Box>{{1, 3}})));
  CHECK_FALSE(is_initial_section(g, a3.to_set(std::vector<Box>{{1, 2}, {2, 3}})));
  CHECK(is_initial_section(g, g.all_vertices()));
  CHECK_THROWS_AS(InitialSection::checked(g, a3.to_set(std::vector<Box>{{1, 3}})),
                  NotInitialSection);
}

TEST_CASE("peeling sequences") {
  const auto a3 = build_a(3);
  const auto& g = a3.graph();
  CHECK(peeling_sequences(g, InitialSection::empty(g)) == std::vector<PeelingSequence>{{}});
  CHECK(peeling_sequences(g, InitialSection::full(g)).size() == 2);

  const auto chain = make_graph({1, 0}, {{0, 1}});
  CHECK(peeling_sequences(chain, InitialSection::full(chain)) ==
        std::vector<PeelingSequence>{{1, 0}});
  CHECK_THROWS_AS(peeling_sequences(a3.graph(), InitialSection::full(a3.graph()), 1), CapExceeded);
}

TEST_CASE("membership test agrees with peeling reachability on random digraphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 1 + trial % 8;
    const auto g = testing::random_digraph(k, 0.45, rng);
    const auto reachable = testing::reachable_sets(g);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      VertexSet s(k);
      for (std::size_t x = 0; x < k; ++x)
        if ((mask >> x) & 1u)
          s.insert(static_cast<VertexId>(x));
      CHECK(is_initial_section(g, s) == (reachable.count(s) != 0));
    }
  }
}

TEST_CASE("residual does not depend on the peeling order, and prefixes stay valid") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_digraph(6, 0.5, rng);
    for (const auto& s : testing::reachable_sets(g)) {
      const auto a = InitialSection::checked(g, s);
      const auto expected = residual(g, a).graph.thetas();
      for (const auto& seq : peeling_sequences(g, a)) {
        PeelState state(g);
        for (std::size_t i = 0; i < seq.size(); ++i) {
          CHECK(is_peeling_sequence(g, std::span(seq).first(i + 1)));
          state.peel(seq[i]);
        }
        std::vector<int> replay;
        for (std::size_t v = 0; v < g.size(); ++v)
          if (!s.contains(static_cast<VertexId>(v))) {
            const int t = state.theta(static_cast<VertexId>(v));
            CHECK(t >= 0);
            CHECK(static_cast<std::size_t>(t) <= g.out_set(static_cast<VertexId>(v)).size() -
                                                     g.out_set(static_cast<VertexId>(v)).intersection_size(s));
            replay.push_back(t);
          }
        CHECK(replay == expected);
      }
    }
  }
}

TEST_CASE("vdg text format round trip and errors") {
  const auto g = ValuedDigraph(read_vdg_file(PEELING_TEST_DATA "/three_vertex.vdg"));
  CHECK(g.size() == 3);
  CHECK(g.label(2) == "c");
  CHECK(g.theta(2) == 1);
  std::ostringstream out;
  write_vdg(out, g);
  std::istringstream in(out.str());
  const auto again = ValuedDigraph(read_vdg(in));
  CHECK(again.description().arcs == g.description().arcs);
  CHECK(again.thetas() == g.thetas());

  const auto json_again = ValuedDigraph(digraph_from_json(to_json(g)));
  CHECK(json_again.description().labels == g.description().labels);

  std::istringstream bad("vdg 2\nvertex 0 0\nvertex 1 zero\n");
  try {
    read_vdg(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream missing("vdg 2\nvertex 0 0\n");
  CHECK_THROWS_AS(read_vdg(missing), ParseError);
  std::istringstream keyword("vdg 1\nvertex 0 0\nedge 0 0\n");
  CHECK_THROWS_AS(read_vdg(keyword), ParseError);
}
