#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "peeling/flag.hpp"

using namespace peeling;

TEST_CASE("flag digraph") {
  const auto f22 = build_flag(2, 2);
  CHECK(f22.size() == 4);
  const auto& g = f22.graph();
  CHECK(g.theta(f22.id({1, 2})) == 0);
  CHECK(g.theta(f22.id({-1, 1})) == 0);
  CHECK(g.theta(f22.id({-1, 2})) == 1);
  CHECK(g.theta(f22.id({-2, 2})) == 0);

  const auto f24 = build_flag(2, 4);
  CHECK(f24.size() == 6 + 10);
  for (int r = 2; r <= 4; ++r)
    for (int b = 1; b <= 3; ++b) {
      const auto d = build_flag(r, 3);
      CHECK(d.graph().theta(d.id({-(r - 1) * b, b})) == 0);
    }
  CHECK_THROWS_AS(build_flag(1, 3), InvalidArgument);

  // A-region ids match the staircase
  const auto a3 = build_a(3);
  const auto f33 = build_flag(3, 3);
  for (std::size_t v = 0; v < a3.size(); ++v)
    CHECK(f33.box(static_cast<VertexId>(v)) == a3.box(static_cast<VertexId>(v)));
}

TEST_CASE("finv and the group law") {
  CHECK(finv(ColoredPermutation::identity(2, 3)) == 0);
  CHECK(finv({2, {1, 1}, Permutation({2, 1})}) == 4);
  CHECK(finv({3, {2, 0}, Permutation::identity(2)}) == 2);

  const auto x = parse_colored_permutation("1,0 | 2,1", 2);
  CHECK(format(x) == "1,0 | 2,1");
  CHECK(x * ColoredPermutation::identity(2, 2) == x);
  CHECK(ColoredPermutation::identity(2, 2) * x == x);
  CHECK_THROWS_AS(parse_colored_permutation("2,0 | 1,2", 2), InvalidArgument);

  // associativity over the whole group
  const auto all = all_colored_permutations(3, 2);
  CHECK(all.size() == 18);
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all)
        CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("cover rule examples") {
  using K = FlagGenerator::Kind;
  const auto id = ColoredPermutation::identity(2, 2);
  CHECK(is_flag_cover(id, {K::b, 1}));
  CHECK_FALSE(is_flag_cover(id, {K::a, 1}));
  CHECK(is_flag_cover({2, {0, 1}, Permutation::identity(2)}, {K::a, 1}));
  CHECK_THROWS_AS(is_flag_cover(id, {K::a, 2}), InvalidArgument);
  CHECK_THROWS_AS(is_flag_cover(id, {K::b, 0}), InvalidArgument);
}

TEST_CASE("psi examples") {
  const auto d = build_flag(2, 2);
  CHECK(psi(d, 2, d.graph().empty_set()) == ColoredPermutation::identity(2, 2));
  const auto one = psi(d, 2, d.to_set(std::vector<Box>{{-1, 1}}));
  CHECK(one.perm == Permutation::identity(2));
  CHECK(one.colors == std::vector<int>{1, 0});
  const auto full = psi(d, 2, d.graph().all_vertices());
  CHECK(full.perm == Permutation({2, 1}));
  CHECK(full.colors == std::vector<int>{1, 1});

  CHECK(psi_inverse(d, ColoredPermutation::identity(2, 2)) == d.graph().empty_set());
  const ColoredPermutation c10{2, {1, 0}, Permutation::identity(2)};
  CHECK(psi_inverse(d, c10) == d.to_set(std::vector<Box>{{-1, 1}}));
  CHECK(psi(d, 2, psi_inverse(d, c10)) == c10);
}

TEST_CASE("flag lattice matches the flag weak order") {
  for (const auto& [r, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const auto d = build_flag(r, n);
    const ISLattice lat = build(d.graph());
    const auto group = all_colored_permutations(r, n);
    CHECK(lat.size() == group.size());

    std::set<ColoredPermutation> images;
    for (const auto& u : lat.elements()) {
      const auto p = psi(d, r, u.members());
      for (int c : p.colors)
        CHECK((c >= 0 && c < r));
      CHECK(finv(p) == u.size());
      CHECK(psi_inverse(d, p) == u.members());
      images.insert(p);
      // rows fill from the left
      for (const Box& c : d.to_boxes(u.members()))
        if (c.a < 0)
          for (long x = -(r - 1) * c.b; x < c.a; ++x)
            CHECK(u.contains(d.id({x, c.b})));
    }
    CHECK(images.size() == group.size());
    for (const auto& p : group)
      CHECK(psi(d, r, psi_inverse(d, p)) == p);

    std::set<std::pair<ColoredPermutation, ColoredPermutation>> lattice_covers, rule_covers;
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j : lat.up(i))
        lattice_covers.emplace(psi(d, r, lat.element(i).members()),
                               psi(d, r, lat.element(j).members()));
    for (const auto& p : group)
      for (const auto& gen : flag_generators(n))
        if (is_flag_cover(p, gen)) {
          const auto q = apply(p, gen);
          CHECK(finv(q) == finv(p) + 1);
          rule_covers.emplace(p, q);
        }
    CHECK(lattice_covers == rule_covers);
  }
}
