#include "peeling/type_b.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace peeling {

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  std::vector<bool> seen(window_.size() + 1, false);
  for (int v : window_) {
    const auto m = static_cast<std::size_t>(std::abs(v));
    if (m < 1 || m > window_.size() || seen[m])
      throw InvalidArgument("not a signed permutation of 1.." + std::to_string(window_.size()));
    seen[m] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w));
}

int SignedPermutation::operator()(int i) const {
  return i > 0 ? window_[static_cast<std::size_t>(i - 1)]
               : -window_[static_cast<std::size_t>(-i - 1)];
}

int SignedPermutation::position(int v) const {
  for (int i = 1; i <= n(); ++i) {
    if ((*this)(i) == v)
      return i;
    if ((*this)(i) == -v)
      return -i;
  }
  throw InvalidArgument("value " + std::to_string(v) + " outside [-n,n]");
}

std::vector<int> SignedPermutation::full_window() const {
  std::vector<int> out;
  for (int i = -n(); i <= n(); ++i)
    if (i != 0)
      out.push_back((*this)(i));
  return out;
}

SignedPermutation SignedPermutation::times_s(int i) const {
  if (i < 0 || i >= n())
    throw InvalidArgument("generator s" + std::to_string(i) + " out of range");
  std::vector<int> w = window_;
  if (i == 0)
    w[0] = -w[0];
  else
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  return SignedPermutation(std::move(w));
}

std::string format(const SignedPermutation& w) {
  std::string out;
  for (int v : w.window()) {
    if (!out.empty())
      out += ',';
    out += std::to_string(v);
  }
  return out;
}

SignedPermutation parse_signed_permutation(const std::string& text) {
  std::vector<int> w;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      w.push_back(std::stoi(tok, &used));
      if (tok.find_first_not_of(" \t", used) != std::string::npos)
        throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse '" + text + "' as a signed window");
    }
  }
  return SignedPermutation(std::move(w));
}

std::size_t length_b(const SignedPermutation& w) {
  long total = 0;
  for (int i = 1; i <= w.n(); ++i) {
    for (int j = i + 1; j <= w.n(); ++j)
      total += w(i) > w(j) ? 1 : 0;
    if (w(i) < 0)
      total -= w(i);
  }
  return static_cast<std::size_t>(total);
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
  std::vector<SignedPermutation> out;
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> w = base;
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1u)
          w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
      out.emplace_back(std::move(w));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool is_shifted_box(long a, long b, long n) {
  return a != 0 && b >= 1 && b <= n && a < b && std::labs(a) <= b;
}

} // namespace

BoxDigraph build_b(int n) {
  if (n < 1)
    throw InvalidArgument("type B needs n >= 1");
  std::vector<Box> boxes;
  for (long b = 1; b <= n; ++b)
    for (long a = -b; a < b; ++a)
      if (a != 0)
        boxes.push_back({a, b});
  auto hook = [n](const Box& c) {
    std::vector<Box> out;
    for (long k = c.a + 1; k < c.b; ++k) {
      for (const Box& t : {Box{k, c.b}, Box{c.a, k}, Box{-k, -c.a}})
        if (is_shifted_box(t.a, t.b, n))
          out.push_back(t);
    }
    return out;
  };
  // theta needs the deduplicated out-degree, so count through a set
  auto theta = [&hook](const Box& c) {
    std::set<Box> targets;
    for (const Box& t : hook(c))
      if (t != c)
        targets.insert(t);
    if (targets.size() % 2 != 0)
      throw std::logic_error("odd out-degree at " + to_string(c));
    return static_cast<long>(targets.size() / 2);
  };
  return BoxDigraph(std::move(boxes), hook, theta);
}

std::vector<Box> inv_b_set(const SignedPermutation& w) {
  std::vector<Box> out;
  for (long b = 1; b <= w.n(); ++b)
    for (long a = -b; a < b; ++a)
      if (a != 0 && w.position(static_cast<int>(a)) > w.position(static_cast<int>(b)))
        out.push_back({a, b});
  std::sort(out.begin(), out.end());
  return out;
}

SignedPermutation signed_perm_from_inversions(int n, std::span<const Box> s) {
  const auto not_inversion_set = [] { return NotInitialSection("not an inversion set"); };
  std::set<Box> inverted;
  for (const Box& c : s) {
    if (!is_shifted_box(c.a, c.b, n))
      throw not_inversion_set();
    inverted.insert(c);
  }
  // x < y, both in [-n,n]\{0}: is the pair out of order?
  auto out_of_order = [&](int x, int y) {
    if (y > 0 && std::abs(x) <= y)
      return inverted.count(Box{x, y}) != 0;
    return inverted.count(Box{-y, -x}) != 0;
  };
  std::vector<int> values;
  for (int v = -n; v <= n; ++v)
    if (v != 0)
      values.push_back(v);
  std::vector<int> full(values.size(), 0);
  for (int v : values) {
    std::size_t before = 0;
    for (int u : values) {
      if (u < v)
        before += out_of_order(u, v) ? 0 : 1;
      else if (u > v)
        before += out_of_order(v, u) ? 1 : 0;
    }
    if (full[before] != 0)
      throw not_inversion_set();
    full[before] = v;
  }
  std::vector<int> w(full.begin() + n, full.end());
  for (int i = 0; i < n; ++i)
    if (full[static_cast<std::size_t>(n - 1 - i)] != -w[static_cast<std::size_t>(i)])
      throw not_inversion_set();
  SignedPermutation result(std::move(w));
  if (inv_b_set(result) != std::vector<Box>(inverted.begin(), inverted.end()))
    throw not_inversion_set();
  return result;
}

int d_omega(const SignedPermutation& w, const Box& box) {
  const int a = static_cast<int>(box.a);
  const int b = static_cast<int>(box.b);
  if (!is_shifted_box(a, b, w.n()))
    throw InvalidArgument("box " + to_string(box) + " outside the shifted diagram");
  if (w.position(a) > w.position(b))
    throw InvalidArgument("box " + to_string(box) + " is an inversion");
  const int pa = w.position(a);
  const int pb = w.position(b);
  int count = 0;
  if (b == -a) {
    for (int k = 1; k < b; ++k)
      count += pa < w.position(k) && w.position(k) < pb ? 1 : 0;
  } else {
    for (int k = a + 1; k < b; ++k)
      if (k != 0)
        count += pa < w.position(k) && w.position(k) < pb ? 1 : 0;
  }
  return count;
}

bool b_adjacent(const SignedPermutation& w, int a, int b) {
  if (!is_shifted_box(a, b, w.n()))
    return false;
  const int pa = w.position(a);
  const int pb = w.position(b);
  // positions skip 0
  const int next = pa == -1 ? 1 : pa + 1;
  return pb == next;
}

CayleyBall<SignedPermutation> weak_order_b(int n) {
  return weak_order_bfs(SignedPermutation::identity(n), static_cast<std::size_t>(n),
                        [](const SignedPermutation& w, std::size_t i) {
                          return w.times_s(static_cast<int>(i));
                        });
}

} // namespace peeling
