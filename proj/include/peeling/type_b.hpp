#pragma once

#include <span>
#include <string>
#include <vector>

#include "peeling/boxes.hpp"
#include "peeling/weak_order.hpp"

namespace peeling {

/// Element of B_n given by the values omega(1..n); the full window on
/// positions -n..-1,1..n follows from omega(-i) = -omega(i).
class SignedPermutation {
public:
  SignedPermutation() = default;
  /// Throws InvalidArgument unless |window| is a permutation of [n].
  explicit SignedPermutation(std::vector<int> window);
  static SignedPermutation identity(int n);

  int n() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  /// omega(i) for i in [-n,n], i != 0.
  int operator()(int i) const;
  /// omega^{-1}(v) for v in [-n,n], v != 0.
  int position(int v) const;
  /// Values at positions -n..-1,1..n.
  std::vector<int> full_window() const;

  /// omega * s_i; s_0 negates omega(1), s_i (i >= 1) swaps positions i, i+1.
  SignedPermutation times_s(int i) const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation& l, const SignedPermutation& r) {
    return l.window_ <=> r.window_;
  }

private:
  std::vector<int> window_;
};

/// "-2,1"
std::string format(const SignedPermutation& w);
SignedPermutation parse_signed_permutation(const std::string& text);

/// inv(omega(1..n)) - sum of the negative entries.
std::size_t length_b(const SignedPermutation& w);
std::vector<SignedPermutation> all_signed_permutations(int n);

/// Shifted diagram: boxes (a,b) with b in [n], a != 0, a < b, |a| <= b.
/// Arcs along shifted hooks; theta = d+/2.
BoxDigraph build_b(int n);

std::vector<Box> inv_b_set(const SignedPermutation& w);
SignedPermutation signed_perm_from_inversions(int n, std::span<const Box> s);

int d_omega(const SignedPermutation& w, const Box& box);
bool b_adjacent(const SignedPermutation& w, int a, int b);

/// Right weak order on B_n, generators s_0..s_{n-1}.
CayleyBall<SignedPermutation> weak_order_b(int n);

} // namespace peeling
