#include <set>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "peeling/posets.hpp"

using namespace peeling;

namespace {

std::set<VertexSet> is_family(const ValuedDigraph& g) { return testing::element_sets(build(g)); }

FinitePoset chain2() { return FinitePoset(2, {{0, 1}}); }
FinitePoset vee() { return FinitePoset(3, {{0, 1}, {0, 2}}); }

} // namespace

TEST_CASE("poset validation") {
  CHECK_THROWS_AS(FinitePoset(2, {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(FinitePoset(3, {{0, 1}, {1, 2}}), InvalidArgument);
  const FinitePoset closed(3, {{0, 1}, {1, 2}}, true);
  CHECK(closed.leq(0, 2));
  CHECK(closed.leq(1, 1));
  CHECK_FALSE(closed.leq(2, 0));
}

TEST_CASE("down-set lattices") {
  const FinitePoset antichain(3, {});
  CHECK(is_family(build_downset(antichain)).size() == 8);
  CHECK(is_family(build_downset(chain2())) ==
        std::set<VertexSet>{VertexSet(2), VertexSet(2, {0}), VertexSet(2, {0, 1})});
  CHECK(is_family(build_downset(vee())).size() == 5);
  CHECK(lower_sets(vee()).size() == 5);
}

TEST_CASE("up-set lattices") {
  CHECK(is_family(build_upset(chain2())) ==
        std::set<VertexSet>{VertexSet(2), VertexSet(2, {1}), VertexSet(2, {0, 1})});
  CHECK(is_family(build_upset(FinitePoset(4, {}))).size() == 16);
}

TEST_CASE("linear extensions") {
  CHECK(linear_extensions(chain2()).size() == 1);
  CHECK(linear_extensions(FinitePoset(3, {})).size() == 6);
  CHECK(linear_extensions(vee()) ==
        std::vector<std::vector<VertexId>>{{0, 1, 2}, {0, 2, 1}});
}

TEST_CASE("random posets: sequences, lower sets, duality, distributivity") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const FinitePoset p = random_poset(1 + seed % 7, 0.35, seed);
    const auto down = build_downset(p);
    const auto up = build_upset(p);

    const auto seqs = peeling_sequences(down, InitialSection::full(down));
    const auto exts = linear_extensions(p);
    CHECK(std::set<PeelingSequence>(seqs.begin(), seqs.end()) ==
          std::set<PeelingSequence>(exts.begin(), exts.end()));

    const auto lowers = lower_sets(p);
    CHECK(is_family(down) == std::set<VertexSet>(lowers.begin(), lowers.end()));

    std::set<VertexSet> complements;
    for (const auto& s : lowers)
      complements.insert(down.all_vertices() - s);
    CHECK(is_family(up) == complements);

    const ISLattice lat = build(down);
    for (const auto& a : lat.elements())
      for (const auto& b : lat.elements()) {
        CHECK(meet(down, a, b).members() == (a.members() & b.members()));
        CHECK(join(lat, a, b).members() == (a.members() | b.members()));
      }
  }
}

TEST_CASE("poset file format") {
  const FinitePoset p = read_poset_file(PEELING_TEST_DATA "/v_poset.txt", false);
  CHECK(p.size() == 3);
  CHECK(p.label(0) == "z");
  CHECK(p.less(0, 2));

  std::istringstream covers("poset 3\nrel 0 1\nrel 1 2\n");
  CHECK(read_poset(covers, true).less(0, 2));
  std::istringstream not_closed("poset 3\nrel 0 1\nrel 1 2\n");
  CHECK_THROWS_AS(read_poset(not_closed, false), ParseError);
  std::istringstream bad("poset 2\nrel 0 5\n");
  try {
    read_poset(bad, false);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}
