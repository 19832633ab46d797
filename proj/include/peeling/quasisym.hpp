#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "peeling/affine.hpp"
#include "peeling/digraph.hpp"
#include "peeling/posets.hpp"
#include "peeling/type_a.hpp"

namespace peeling {

/// Polynomial in x_1..x_m with exact integer coefficients. Zero
/// coefficients are never stored. Throws std::overflow_error if a
/// coefficient leaves the int64 range.
class TruncatedPolynomial {
public:
  using Exponents = std::vector<int>;

  explicit TruncatedPolynomial(int m = 1);
  static TruncatedPolynomial one(int m);

  int num_vars() const { return m_; }
  const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Exponents& e, std::int64_t coef = 1);
  /// Adds the monomial x_{v_1} x_{v_2} ... for 1-based variable indices.
  void add_product(std::span<const int> variables, std::int64_t coef = 1);
  std::int64_t coefficient(const Exponents& e) const;
  /// Coefficient of x_1 x_2 ... x_k.
  std::int64_t square_free_coefficient(int k) const;

  TruncatedPolynomial& operator+=(const TruncatedPolynomial& other);
  friend bool operator==(const TruncatedPolynomial&, const TruncatedPolynomial&) = default;

  /// Graded lexicographic, largest first: "x1^2*x2 + 3*x1*x2^2".
  std::string to_string() const;
  /// {"m":..,"terms":[{"exps":[..],"coef":..}]}
  nlohmann::json to_json() const;

private:
  int m_;
  std::map<Exponents, std::int64_t> terms_;
};

std::ostream& operator<<(std::ostream& out, const TruncatedPolynomial& p);

/// Moving an isolated exponent block from x_i to an unused x_{i+1} keeps
/// the coefficient. Returns the first violation, or an empty string.
std::string quasi_symmetry_violation(const TruncatedPolynomial& p);
/// Swapping x_i and x_{i+1} keeps the coefficient.
std::string symmetry_violation(const TruncatedPolynomial& p);

/// Fundamental quasi-symmetric polynomial G_X in m variables, degree n.
TruncatedPolynomial fundamental(const std::set<int>& x, int n, int m);

/// U_z for every vertex z.
using Columns = std::vector<VertexSet>;
/// f(z) in [1,m] for z in A, 0 elsewhere.
using Labeling = std::vector<int>;

/// Format: lines `col <z> <y> <y> ...` naming vertices by label or id;
/// vertices without a line get an empty set. Throws ParseError.
Columns read_columns(std::istream& in, const ValuedDigraph& g);
Columns read_columns_file(const std::string& path, const ValuedDigraph& g);

/// Every peeling sequence of `a` along which f is weakly increasing and
/// strictly increasing into U-cells.
std::vector<PeelingSequence> compatible_sequences(const ValuedDigraph& g, const InitialSection& a,
                                                  const Columns& u, const Labeling& f);
bool is_compatible(const ValuedDigraph& g, const Columns& u, const Labeling& f,
                   std::span<const VertexId> sequence);

/// SSF(A,U) with values in [1,m], sorted. Throws CapExceeded.
std::vector<Labeling> semi_standard_functions(const ValuedDigraph& g, const InitialSection& a,
                                              const Columns& u, int m,
                                              std::size_t cap = 2'000'000);
TruncatedPolynomial gamma(const ValuedDigraph& g, const InitialSection& a, const Columns& u, int m,
                          std::size_t cap = 2'000'000);
/// Reference: tries all m^|A| functions.
TruncatedPolynomial gamma_oracle(const ValuedDigraph& g, const InitialSection& a,
                                 const Columns& u, int m);

/// U_z = {y : label(z) > label(y)} for a bijective labeling 1..k.
Columns p_partition_columns(const FinitePoset& p, const std::vector<int>& label);
/// Sum over linear extensions of G_{Des}.
TruncatedPolynomial gamma_p_partition(const FinitePoset& p, const std::vector<int>& label, int m);
/// Same series through gamma on the down-set digraph.
TruncatedPolynomial gamma_p_partition_columns(const FinitePoset& p, const std::vector<int>& label,
                                              int m);

std::vector<std::vector<int>> reduced_words(const Permutation& p);
std::vector<std::vector<int>> reduced_words(const AffinePermutation& p,
                                            std::size_t cap = 1'000'000);

/// Sum over reduced words and admissible weight sequences.
TruncatedPolynomial stanley(const Permutation& p, int m);

/// Letters in 1..n (n standing for 0 mod n): no repeats, and j+1 comes
/// before j whenever both occur.
bool is_cyclically_decreasing_word(std::span<const int> word, int n);
/// Some reduced word is cyclically decreasing.
bool is_cyclically_decreasing(const AffinePermutation& p);
/// All cyclically decreasing elements, built from letter subsets.
std::vector<AffinePermutation> cyclically_decreasing_elements(int n);

/// Sum over factorizations into exactly m cyclically decreasing factors
/// with additive lengths.
TruncatedPolynomial affine_stanley(const AffinePermutation& p, int m,
                                   std::size_t cap = 5'000'000);

/// Full columns of the staircase: U_(a,b) = {(a,k) : a < k <= n}.
Columns columns_a(const BoxDigraph& staircase);
/// Columns of a cylindrical window: U_(a,b) = {(a,k) : a < k, k != a mod n}.
Columns columns_affine(const BoxDigraph& window);

using BoxLabeling = std::map<Box, int>;

BoxLabeling to_box_labeling(const BoxDigraph& diagram, const Labeling& f);
Labeling to_labeling(const BoxDigraph& diagram, const BoxLabeling& f);

/// Largest value, ties broken by smallest sigma^{-1}(a).
Box leading_cell(const BoxLabeling& f, const Permutation& p);

struct WordWithWeights {
  std::vector<int> word;
  std::vector<int> weights;
  friend auto operator<=>(const WordWithWeights&, const WordWithWeights&) = default;
};

/// Removes leading cells one at a time; the i-th letter records the
/// generator that put the cell in place. Throws InvalidArgument if f is not
/// a semi-standard labeling of Inv(p).
WordWithWeights psi_a(const BoxLabeling& f, const Permutation& p);
BoxLabeling psi_a_inverse(const WordWithWeights& ww, int n);

/// Factor k collects the generators of the cells labeled k along L.
std::vector<AffinePermutation> affine_factorization(const BoxDigraph& window, int n,
                                                    const Labeling& f,
                                                    std::span<const VertexId> sequence, int m);

} // namespace peeling
