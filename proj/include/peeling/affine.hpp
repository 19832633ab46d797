#pragma once

#include <span>
#include <string>
#include <vector>

#include "peeling/boxes.hpp"
#include "peeling/weak_order.hpp"

namespace peeling {

/// Affine permutation of period n: a bijection of Z with
/// sigma(i + kn) = sigma(i) + kn and sigma(1) + ... + sigma(n) = n(n+1)/2.
/// The group has n generators s_1..s_n; s_n swaps positions n and n+1.
class AffinePermutation {
public:
  AffinePermutation() = default;
  /// Throws InvalidArgument for windows that are not affine permutations.
  explicit AffinePermutation(std::vector<long> window);
  static AffinePermutation identity(int n);

  int n() const { return static_cast<int>(window_.size()); }
  const std::vector<long>& window() const { return window_; }
  /// sigma(i) for any integer i.
  long operator()(long i) const;
  /// sigma^{-1}(v) for any integer v.
  long position(long v) const;

  AffinePermutation times_s(int i) const;
  AffinePermutation operator*(const AffinePermutation& omega) const;
  AffinePermutation inverse() const;

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation& l, const AffinePermutation& r) {
    return l.window_ <=> r.window_;
  }

private:
  std::vector<long> window_;
};

/// "2,1,3"
std::string format(const AffinePermutation& p);
AffinePermutation parse_affine_permutation(const std::string& text);

/// Coxeter length from the window: sum over i<j of |floor((sigma(j)-sigma(i))/n)|.
std::size_t length_affine(const AffinePermutation& p);

/// Finite part of the cylindrical diagram: boxes (a,b), a in [n], b not
/// congruent to a, a < b <= a + depth*n. Closed under out-arcs.
BoxDigraph build_affine(int n, int depth);

/// (a,b) with a in [n], a < b, sigma^{-1}(a) > sigma^{-1}(b).
std::vector<Box> inv_affine(const AffinePermutation& p);

/// Window depth at which questions about `s` (membership, erasability,
/// peeling) agree with the infinite digraph.
int sufficient_depth(std::span<const Box> s, int n);

/// Throws NotInitialSection ("not an inversion set").
AffinePermutation affine_perm_from_inversions(std::span<const Box> s, int n);

int d_sigma_affine(const AffinePermutation& p, const Box& box);
bool affine_adjacent(const AffinePermutation& p, long a, long b);

/// Elements of length <= max_length by generator BFS.
CayleyBall<AffinePermutation> weak_order_affine(int n, std::size_t max_length);

} // namespace peeling
