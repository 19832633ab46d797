#include <set>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "peeling/quasisym.hpp"

using namespace peeling;

namespace {

AffinePermutation affine_word(int n, std::initializer_list<int> letters) {
  AffinePermutation p = AffinePermutation::identity(n);
  for (int i : letters)
    p = p.times_s(i);
  return p;
}

TruncatedPolynomial poly(int m, std::vector<std::pair<std::vector<int>, std::int64_t>> terms) {
  TruncatedPolynomial p(m);
  for (const auto& [e, c] : terms)
    p.add(e, c);
  return p;
}

} // namespace

TEST_CASE("polynomial arithmetic and printing") {
  auto p = poly(2, {{{2, 1}, 1}, {{1, 2}, 1}});
  CHECK(p.to_string() == "x1^2*x2 + x1*x2^2");
  p.add({1, 2}, -1);
  CHECK(p.to_string() == "x1^2*x2");
  CHECK(TruncatedPolynomial::one(3).to_string() == "1");
  CHECK(TruncatedPolynomial(3).to_string() == "0");
  CHECK(poly(2, {{{1, 0}, 3}, {{0, 0}, -2}}).to_string() == "3*x1 - 2");
  CHECK(p.to_json()["terms"][0]["coef"] == 1);
  auto big = poly(1, {{{1}, INT64_MAX}});
  CHECK_THROWS_AS(big.add({1}, 1), std::overflow_error);
}

TEST_CASE("fundamental quasi-symmetric polynomials") {
  CHECK(fundamental({}, 2, 2) == poly(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
  CHECK(fundamental({1, 2, 3}, 4, 4) == poly(4, {{{1, 1, 1, 1}, 1}}));
  CHECK(fundamental({1}, 3, 2) == poly(2, {{{1, 2}, 1}}));
  CHECK_THROWS_AS(fundamental({3}, 3, 2), InvalidArgument);
}

TEST_CASE("column families") {
  const auto a3 = build_a(3);
  const Columns u = columns_a(a3);
  CHECK(a3.to_boxes(u[a3.id({1, 2})]) == std::vector<Box>{{1, 2}, {1, 3}});
  CHECK(a3.to_boxes(u[a3.id({2, 3})]) == std::vector<Box>{{2, 3}});

  const auto w = build_affine(3, 2);
  const Columns cu = columns_affine(w);
  const auto col = w.to_boxes(cu[w.id({1, 2})]);
  CHECK(col == std::vector<Box>{{1, 2}, {1, 3}, {1, 5}, {1, 6}});
}

TEST_CASE("gamma examples") {
  const auto a3 = build_a(3);
  const auto& g = a3.graph();
  const Columns u = columns_a(a3);
  CHECK(gamma(g, InitialSection::empty(g), u, 3) == TruncatedPolynomial::one(3));
  const auto top = gamma(g, InitialSection::full(g), u, 2);
  CHECK(top.to_string() == "x1^2*x2 + x1*x2^2");
  CHECK(gamma(g, InitialSection::full(g), u, 3).square_free_coefficient(3) == 2);
}

TEST_CASE("gamma agrees with the all-functions oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = testing::random_digraph(5, 0.4, rng);
    Columns u(g.size(), g.empty_set());
    std::bernoulli_distribution coin(0.3);
    for (auto& s : u)
      for (std::size_t y = 0; y < g.size(); ++y)
        if (coin(rng))
          s.insert(static_cast<VertexId>(y));
    const ISLattice lat = build(g);
    for (const auto& a : lat.elements())
      for (int m = 1; m <= 3; ++m) {
        const auto fast = gamma(g, a, u, m);
        CHECK(fast == gamma_oracle(g, a, u, m));
        CHECK(quasi_symmetry_violation(fast).empty());
      }
    for (const auto& a : lat.elements()) {
      Columns none(g.size(), g.empty_set());
      const int k = static_cast<int>(a.size());
      CHECK(BigInt(gamma(g, a, u, k).square_free_coefficient(k)) == maximal_chain_count(g, a));
      CHECK(BigInt(gamma(g, a, none, k).square_free_coefficient(k)) == maximal_chain_count(g, a));
    }
  }
}

TEST_CASE("P-partition series, two ways") {
  const FinitePoset one(1, {});
  CHECK(gamma_p_partition(one, {1}, 3) == poly(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}}));
  const FinitePoset antichain(2, {});
  auto expected = fundamental({}, 2, 3);
  expected += fundamental({1}, 2, 3);
  CHECK(gamma_p_partition(antichain, {1, 2}, 3) == expected);
  const FinitePoset chain(2, {{0, 1}});
  CHECK(gamma_p_partition(chain, {2, 1}, 3) == fundamental({1}, 2, 3));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const FinitePoset p = random_poset(1 + seed % 5, 0.4, seed);
    std::vector<int> label(p.size());
    std::iota(label.begin(), label.end(), 1);
    std::shuffle(label.begin(), label.end(), std::mt19937_64(seed));
    CHECK(gamma_p_partition(p, label, 3) == gamma_p_partition_columns(p, label, 3));
  }
  CHECK_THROWS_AS(gamma_p_partition(chain, {1, 1}, 2), InvalidArgument);
}

TEST_CASE("reduced words and Stanley symmetric functions") {
  CHECK(reduced_words(Permutation::identity(3)) == std::vector<std::vector<int>>{{}});
  CHECK(reduced_words(Permutation({3, 2, 1})) == std::vector<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});
  CHECK(reduced_words(Permutation({4, 3, 2, 1})).size() == 16);

  CHECK(stanley(Permutation::identity(3), 3) == TruncatedPolynomial::one(3));
  CHECK(stanley(Permutation({2, 1, 3}), 3) == poly(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}}));
  CHECK(stanley(Permutation({3, 2, 1}), 2).to_string() == "x1^2*x2 + x1*x2^2");

  for (const auto& p : all_permutations(3)) {
    const auto a3 = build_a(3);
    const auto a = InitialSection::checked(a3.graph(), inversion_vertex_set(a3, p));
    CHECK(gamma(a3.graph(), a, columns_a(a3), 3) == stanley(p, 3));
    CHECK(symmetry_violation(stanley(p, 3)).empty());
  }
}

TEST_CASE("cyclically decreasing elements") {
  CHECK(is_cyclically_decreasing_word(std::vector<int>{2, 1}, 3));
  CHECK_FALSE(is_cyclically_decreasing_word(std::vector<int>{1, 2}, 3));
  CHECK(is_cyclically_decreasing_word(std::vector<int>{1, 3}, 3));
  CHECK_FALSE(is_cyclically_decreasing_word(std::vector<int>{3, 1}, 3));
  CHECK_FALSE(is_cyclically_decreasing_word(std::vector<int>{1, 1}, 3));
  CHECK_FALSE(is_cyclically_decreasing(affine_word(3, {1, 2})));
  CHECK(is_cyclically_decreasing(affine_word(3, {2, 1})));
  CHECK(is_cyclically_decreasing(AffinePermutation::identity(3)));

  for (int n = 2; n <= 4; ++n) {
    const auto listed = cyclically_decreasing_elements(n);
    CHECK(listed.size() == (std::size_t{1} << n) - 1);
    std::set<AffinePermutation> by_words;
    for (const auto& p : weak_order_affine(n, static_cast<std::size_t>(n)).elements)
      if (is_cyclically_decreasing(p))
        by_words.insert(p);
    CHECK(std::set<AffinePermutation>(listed.begin(), listed.end()) == by_words);
  }
}

TEST_CASE("affine Stanley examples") {
  CHECK(affine_stanley(AffinePermutation::identity(3), 2) == TruncatedPolynomial::one(2));
  CHECK(affine_stanley(affine_word(3, {1}), 2).to_string() == "x1 + x2");
  const auto s1s2 = affine_word(3, {1, 2});
  const auto value = affine_stanley(s1s2, 2);
  CHECK(value.to_string() == "x1*x2");
  const auto window = build_affine(3, sufficient_depth(inv_affine(s1s2), 3));
  const auto a = InitialSection::checked(window.graph(), window.to_set(inv_affine(s1s2)));
  CHECK(gamma(window.graph(), a, columns_affine(window), 2) == value);
}

TEST_CASE("leading cell and the type A bijection") {
  const Permutation w0({3, 2, 1});
  const BoxLabeling f{{{1, 2}, 1}, {{1, 3}, 2}, {{2, 3}, 2}};
  const Box lead = leading_cell(f, w0);
  CHECK(lead == Box{2, 3});
  auto rest = inversion_set(w0);
  rest.erase(std::find(rest.begin(), rest.end(), lead));
  CHECK_NOTHROW(permutation_from_inversions(3, rest));
  CHECK_THROWS_AS(leading_cell({}, w0), InvalidArgument);
  const BoxLabeling same_column{{{1, 2}, 1}, {{1, 3}, 1}, {{2, 3}, 2}};
  CHECK_THROWS_AS(psi_a(same_column, w0), InvalidArgument);

  for (int n = 2; n <= 4; ++n) {
    const auto diagram = build_a(n);
    const auto& g = diagram.graph();
    const int m = n == 4 ? 2 : 3;
    for (const auto& p : all_permutations(n)) {
      const auto a = InitialSection::checked(g, inversion_vertex_set(diagram, p));
      const auto words = reduced_words(p);
      std::set<WordWithWeights> images;
      for (const auto& f : semi_standard_functions(g, a, columns_a(diagram), m)) {
        const BoxLabeling bf = to_box_labeling(diagram, f);
        const auto ww = psi_a(bf, p);
        CHECK(std::find(words.begin(), words.end(), ww.word) != words.end());
        for (std::size_t j = 0; j + 1 < ww.word.size(); ++j) {
          CHECK(ww.weights[j] <= ww.weights[j + 1]);
          if (ww.word[j] < ww.word[j + 1])
            CHECK(ww.weights[j] < ww.weights[j + 1]);
        }
        std::vector<int> from_f, from_w = ww.weights;
        for (const auto& [c, v] : bf)
          from_f.push_back(v);
        std::sort(from_f.begin(), from_f.end());
        CHECK(from_f == from_w);
        CHECK(psi_a_inverse(ww, n) == bf);
        images.insert(ww);
      }
      std::int64_t total = 0;
      const auto series = stanley(p, m);
      for (const auto& [e, c] : series.terms())
        total += c;
      CHECK(static_cast<std::int64_t>(images.size()) == total);
    }
  }
}

TEST_CASE("affine factorization does not depend on the compatible sequence") {
  const int n = 3;
  const int m = 3;
  for (const auto& omega : weak_order_affine(n, 4).elements) {
    const auto s = inv_affine(omega);
    const auto window = build_affine(n, sufficient_depth(s, n));
    const auto& g = window.graph();
    const auto a = InitialSection::checked(g, window.to_set(s));
    const Columns u = columns_affine(window);
    for (const auto& f : semi_standard_functions(g, a, u, m)) {
      const auto seqs = compatible_sequences(g, a, u, f);
      REQUIRE_FALSE(seqs.empty());
      const auto first = affine_factorization(window, n, f, seqs.front(), m);
      AffinePermutation product = AffinePermutation::identity(n);
      std::size_t total = 0;
      for (const auto& v : first) {
        CHECK(is_cyclically_decreasing(v));
        product = product * v;
        total += length_affine(v);
      }
      CHECK(product == omega);
      CHECK(total == length_affine(omega));
      for (const auto& seq : seqs)
        CHECK(affine_factorization(window, n, f, seq, m) == first);
    }
  }
}

TEST_CASE("columns file") {
  const auto a3 = build_a(3);
  std::istringstream in("# column of (1,*)\ncol (1,2) (1,2) (1,3)\ncol 1 1\n");
  const Columns u = read_columns(in, a3.graph());
  CHECK(a3.to_boxes(u[a3.id({1, 2})]) == std::vector<Box>{{1, 2}, {1, 3}});
  CHECK(u[1].contains(1));
  CHECK(u[2].empty());
  std::istringstream bad("col (9,9)\n");
  CHECK_THROWS_AS(read_columns(bad, a3.graph()), ParseError);
}
