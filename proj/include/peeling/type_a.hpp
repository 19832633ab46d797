#pragma once

#include <span>
#include <string>
#include <vector>

#include "peeling/boxes.hpp"
#include "peeling/weak_order.hpp"

namespace peeling {

/// Element of S_n in one-line notation; values are 1-based.
class Permutation {
public:
  Permutation() = default;
  /// Throws InvalidArgument unless `window` is a bijection of [n].
  explicit Permutation(std::vector<int> window);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  /// sigma(i), 1 <= i <= n.
  int operator()(int i) const { return window_[static_cast<std::size_t>(i - 1)]; }
  /// sigma^{-1}(v).
  int position(int v) const { return inverse_[static_cast<std::size_t>(v - 1)]; }

  /// sigma * s_i: swaps window positions i and i+1.
  Permutation times_s(int i) const;
  /// (sigma * omega)(i) = sigma(omega(i)).
  Permutation operator*(const Permutation& omega) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation& l, const Permutation& r) { return l.window_ == r.window_; }
  friend auto operator<=>(const Permutation& l, const Permutation& r) { return l.window_ <=> r.window_; }

private:
  std::vector<int> window_;
  std::vector<int> inverse_;
};

/// "3,1,2"
std::string format(const Permutation& p);
Permutation parse_permutation(const std::string& text);

/// Number of pairs i<j with sigma(i) > sigma(j).
std::size_t length(const Permutation& p);
std::vector<Permutation> all_permutations(int n);

/// Staircase diagram: boxes (a,b), 1 <= a < b <= n, ordered by (b-a, a);
/// arcs from (a,b) to (a,k) and (k,b) for a<k<b; theta(a,b) = b-a-1.
BoxDigraph build_a(int n);

/// Pairs (a,b), a<b, with sigma^{-1}(a) > sigma^{-1}(b), sorted.
std::vector<Box> inversion_set(const Permutation& p);
VertexSet inversion_vertex_set(const BoxDigraph& diagram, const Permutation& p);

/// The permutation whose inversion set is `s`. Throws NotInitialSection
/// ("not an inversion set") otherwise.
Permutation permutation_from_inversions(int n, std::span<const Box> s);

/// |{a<k<b : sigma^{-1}(a) < sigma^{-1}(k) < sigma^{-1}(b)}| for a
/// non-inversion (a,b). Throws InvalidArgument on inversions.
int d_sigma(const Permutation& p, const Box& box);

/// b immediately follows a in the window.
bool adjacent(const Permutation& p, int a, int b);

/// Right weak order on S_n by generator BFS.
CayleyBall<Permutation> weak_order_a(int n);

} // namespace peeling
