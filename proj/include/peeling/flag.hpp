#pragma once

#include <string>
#include <vector>

#include "peeling/boxes.hpp"
#include "peeling/type_a.hpp"

namespace peeling {

/// Element ((c_1..c_n), sigma) of Z_r wr S_n.
struct ColoredPermutation {
  int r = 2;
  std::vector<int> colors;
  Permutation perm;

  int n() const { return perm.n(); }
  /// Throws InvalidArgument on color range or size mismatch.
  void validate() const;
  static ColoredPermutation identity(int r, int n);

  /// ((c_{omega(i)} + d_i mod r)_i, sigma * omega).
  ColoredPermutation operator*(const ColoredPermutation& other) const;

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
  friend auto operator<=>(const ColoredPermutation& l, const ColoredPermutation& r) {
    if (auto c = l.colors <=> r.colors; c != 0)
      return c;
    return l.perm <=> r.perm;
  }
};

/// "1,0 | 2,1"
std::string format(const ColoredPermutation& p);
ColoredPermutation parse_colored_permutation(const std::string& text, int r);

std::vector<ColoredPermutation> all_colored_permutations(int r, int n);

/// a_i = (e_i, s_i) for 1 <= i < n, b_i = (e_i, id) for 1 <= i <= n.
struct FlagGenerator {
  enum class Kind { a, b } kind;
  int index;
  friend bool operator==(const FlagGenerator&, const FlagGenerator&) = default;
};

std::string to_string(const FlagGenerator& g);
std::vector<FlagGenerator> flag_generators(int n);
ColoredPermutation generator_element(int r, int n, const FlagGenerator& g);
/// p * generator.
ColoredPermutation apply(const ColoredPermutation& p, const FlagGenerator& g);

/// Cover test of the flag weak order: b_i when c_i != r-1; a_i when
/// c_{i+1} = r-1 and sigma(i) < sigma(i+1). Throws InvalidArgument on a bad
/// index.
bool is_flag_cover(const ColoredPermutation& p, const FlagGenerator& g);

/// r * |Inv(sigma)| + sum of colors.
std::size_t finv(const ColoredPermutation& p);

/// Staircase boxes (same ids as build_a) followed by the B-region boxes
/// (a,b), b in [n], -b(r-1) <= a <= -1, ordered by row then a. B-boxes point
/// to every box to their right in the same row. Requires r >= 2.
BoxDigraph build_flag(int r, int n);

/// Bijection from IS(G(r,n)) to the group. Throws NotInitialSection.
ColoredPermutation psi(const BoxDigraph& diagram, int r, const VertexSet& u);
VertexSet psi_inverse(const BoxDigraph& diagram, const ColoredPermutation& p);

} // namespace peeling
