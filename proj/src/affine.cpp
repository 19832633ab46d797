#include "peeling/affine.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace peeling {

namespace {

long mod(long x, long n) {
  const long r = x % n;
  return r < 0 ? r + n : r;
}

long floor_div(long x, long n) { return (x - mod(x, n)) / n; }

bool is_cyl_box(const Box& c, long n) {
  return c.a >= 1 && c.a <= n && c.a < c.b && mod(c.b - c.a, n) != 0;
}

} // namespace

AffinePermutation::AffinePermutation(std::vector<long> window) : window_(std::move(window)) {
  const long n = static_cast<long>(window_.size());
  if (n < 1)
    throw InvalidArgument("affine permutation needs n >= 1");
  std::vector<bool> seen(window_.size(), false);
  long sum = 0;
  for (long v : window_) {
    const auto r = static_cast<std::size_t>(mod(v, n));
    if (seen[r])
      throw InvalidArgument("window entries must be distinct modulo " + std::to_string(n));
    seen[r] = true;
    sum += v;
  }
  if (sum != n * (n + 1) / 2)
    throw InvalidArgument("window must sum to " + std::to_string(n * (n + 1) / 2));
}

AffinePermutation AffinePermutation::identity(int n) {
  std::vector<long> w;
  for (long i = 1; i <= n; ++i)
    w.push_back(i);
  return AffinePermutation(std::move(w));
}

long AffinePermutation::operator()(long i) const {
  const long n = this->n();
  const long q = mod(i - 1, n) + 1;
  return window_[static_cast<std::size_t>(q - 1)] + (i - q);
}

long AffinePermutation::position(long v) const {
  const long n = this->n();
  for (long q = 1; q <= n; ++q) {
    const long s = window_[static_cast<std::size_t>(q - 1)];
    if (mod(v - s, n) == 0)
      return q + (v - s);
  }
  throw std::logic_error("affine permutation misses a residue class");
}

AffinePermutation AffinePermutation::times_s(int i) const {
  const int n = this->n();
  if (i < 1 || i > n)
    throw InvalidArgument("generator s" + std::to_string(i) + " out of range");
  std::vector<long> w = window_;
  if (i < n) {
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  } else {
    w[0] = (*this)(0);
    w[static_cast<std::size_t>(n - 1)] = (*this)(n + 1);
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::operator*(const AffinePermutation& omega) const {
  if (omega.n() != n())
    throw InvalidArgument("affine permutation periods differ");
  std::vector<long> w;
  for (long i = 1; i <= n(); ++i)
    w.push_back((*this)(omega(i)));
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::inverse() const {
  std::vector<long> w;
  for (long i = 1; i <= n(); ++i)
    w.push_back(position(i));
  return AffinePermutation(std::move(w));
}

std::string format(const AffinePermutation& p) {
  std::string out;
  for (long v : p.window()) {
    if (!out.empty())
      out += ',';
    out += std::to_string(v);
  }
  return out;
}

AffinePermutation parse_affine_permutation(const std::string& text) {
  std::vector<long> w;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      w.push_back(std::stol(tok, &used));
      if (tok.find_first_not_of(" \t", used) != std::string::npos)
        throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse '" + text + "' as an affine window");
    }
  }
  return AffinePermutation(std::move(w));
}

std::size_t length_affine(const AffinePermutation& p) {
  const long n = p.n();
  long total = 0;
  for (long i = 1; i <= n; ++i)
    for (long j = i + 1; j <= n; ++j)
      total += std::labs(floor_div(p(j) - p(i), n));
  return static_cast<std::size_t>(total);
}

BoxDigraph build_affine(int n, int depth) {
  if (n < 2)
    throw InvalidArgument("affine type needs n >= 2");
  if (depth < 1)
    throw InvalidArgument("window depth must be >= 1");
  const long N = n;
  std::vector<Box> boxes;
  for (long d = 1; d <= depth * N; ++d)
    for (long a = 1; a <= N; ++a)
      if (mod(d, N) != 0)
        boxes.push_back({a, a + d});
  auto hook = [N](const Box& c) {
    std::vector<Box> out;
    for (long k = c.a + 1; k < c.b; ++k)
      if (mod(k - c.a, N) != 0)
        out.push_back({c.a, k});
    // row part, unrolled: (k,b) translated so the first coordinate lands in [1,n]
    for (long k = c.a + 1; k < c.b; ++k)
      if (mod(c.b - k, N) != 0) {
        const long shift = k - (mod(k - 1, N) + 1);
        out.push_back({k - shift, c.b - shift});
      }
    return out;
  };
  auto theta = [N](const Box& c) {
    long count = 0;
    for (long k = c.a + 1; k < c.b; ++k)
      count += mod(k - c.a, N) != 0 ? 1 : 0;
    return count;
  };
  return BoxDigraph(std::move(boxes), hook, theta);
}

std::vector<Box> inv_affine(const AffinePermutation& p) {
  const long n = p.n();
  long drift = 0; // max sigma(i) - i
  for (long i = 1; i <= n; ++i)
    drift = std::max(drift, p(i) - i);
  std::vector<Box> out;
  for (long a = 1; a <= n; ++a) {
    const long pa = p.position(a);
    // sigma(j) > a forces j > a - drift
    for (long j = a - drift + 1; j < pa; ++j) {
      const long b = p(j);
      if (b > a)
        out.push_back({a, b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int sufficient_depth(std::span<const Box> s, int n) {
  long max_b = 1;
  for (const Box& c : s)
    max_b = std::max(max_b, c.b);
  const long base = (max_b - 1 + n - 1) / n;
  return static_cast<int>(std::max(1L, base + static_cast<long>(s.size()) + 1));
}

AffinePermutation affine_perm_from_inversions(std::span<const Box> s, int n) {
  const auto not_inversion_set = [] { return NotInitialSection("not an inversion set"); };
  for (const Box& c : s)
    if (!is_cyl_box(c, n))
      throw not_inversion_set();
  const BoxDigraph window = build_affine(n, sufficient_depth(s, n));
  const VertexSet target = window.to_set(s);
  if (!is_initial_section(window.graph(), target))
    throw not_inversion_set();

  AffinePermutation sigma = AffinePermutation::identity(n);
  PeelState state(window.graph());
  for (std::size_t step = 0; step < target.size(); ++step) {
    std::optional<VertexId> next;
    for (VertexId v : state.erasable())
      if (target.contains(v)) {
        next = v;
        break;
      }
    if (!next)
      throw not_inversion_set();
    const Box& c = window.box(*next);
    if (!affine_adjacent(sigma, c.a, c.b))
      throw std::logic_error("erasable box " + to_string(c) + " is not adjacent");
    sigma = sigma.times_s(static_cast<int>(mod(sigma.position(c.a) - 1, n) + 1));
    state.peel(*next);
  }
  std::vector<Box> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (inv_affine(sigma) != sorted)
    throw not_inversion_set();
  return sigma;
}

int d_sigma_affine(const AffinePermutation& p, const Box& box) {
  const long n = p.n();
  if (!is_cyl_box(box, n))
    throw InvalidArgument("box " + to_string(box) + " outside the cylindrical diagram");
  const long pa = p.position(box.a);
  const long pb = p.position(box.b);
  if (pa > pb)
    throw InvalidArgument("box " + to_string(box) + " is an inversion");
  int count = 0;
  for (long k = box.a + 1; k < box.b; ++k)
    if (mod(k - box.a, n) != 0) {
      const long pk = p.position(k);
      count += pa < pk && pk < pb ? 1 : 0;
    }
  return count;
}

bool affine_adjacent(const AffinePermutation& p, long a, long b) {
  return a >= 1 && a <= p.n() && a < b && p.position(a) == p.position(b) - 1;
}

CayleyBall<AffinePermutation> weak_order_affine(int n, std::size_t max_length) {
  return weak_order_bfs(
      AffinePermutation::identity(n), static_cast<std::size_t>(n),
      [](const AffinePermutation& p, std::size_t i) { return p.times_s(static_cast<int>(i) + 1); },
      max_length);
}

} // namespace peeling
