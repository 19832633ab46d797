#include "peeling/type_a.hpp"

#include <cctype>
#include <algorithm>
#include <numeric>
#include <sstream>

namespace peeling {

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = static_cast<int>(window_.size());
  inverse_.assign(window_.size(), 0);
  for (int i = 1; i <= n; ++i) {
    const int v = window_[static_cast<std::size_t>(i - 1)];
    if (v < 1 || v > n || inverse_[static_cast<std::size_t>(v - 1)] != 0)
      throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
    inverse_[static_cast<std::size_t>(v - 1)] = i;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::times_s(int i) const {
  if (i < 1 || i >= n())
    throw InvalidArgument("generator s" + std::to_string(i) + " out of range");
  std::vector<int> w = window_;
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  return Permutation(std::move(w));
}

Permutation Permutation::operator*(const Permutation& omega) const {
  if (omega.n() != n())
    throw InvalidArgument("permutation sizes differ");
  std::vector<int> w;
  for (int i = 1; i <= n(); ++i)
    w.push_back((*this)(omega(i)));
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const { return Permutation(inverse_); }

std::string format(const Permutation& p) {
  std::string out;
  for (int v : p.window()) {
    if (!out.empty())
      out += ',';
    out += std::to_string(v);
  }
  return out;
}

namespace {

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used])))
        ++used;
      if (used != tok.size())
        throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse '" + text + "' as a comma-separated window");
    }
  }
  return out;
}

} // namespace

Permutation parse_permutation(const std::string& text) { return Permutation(parse_ints(text)); }

std::size_t length(const Permutation& p) {
  std::size_t count = 0;
  for (int i = 1; i <= p.n(); ++i)
    for (int j = i + 1; j <= p.n(); ++j)
      count += p(i) > p(j) ? 1 : 0;
  return count;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do
    out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

BoxDigraph build_a(int n) {
  if (n < 1)
    throw InvalidArgument("type A needs n >= 1");
  std::vector<Box> boxes;
  for (long d = 1; d < n; ++d)
    for (long a = 1; a + d <= n; ++a)
      boxes.push_back({a, a + d});
  auto hook = [](const Box& c) {
    std::vector<Box> out;
    for (long k = c.a + 1; k < c.b; ++k) {
      out.push_back({c.a, k});
      out.push_back({k, c.b});
    }
    return out;
  };
  BoxDigraph diagram(std::move(boxes), hook, [](const Box& c) { return c.b - c.a - 1; });
  for (std::size_t v = 0; v < diagram.size(); ++v)
    if (2 * diagram.graph().theta(static_cast<VertexId>(v)) !=
        static_cast<int>(diagram.graph().out(static_cast<VertexId>(v)).size()))
      throw std::logic_error("staircase valuation differs from half the out-degree");
  return diagram;
}

std::vector<Box> inversion_set(const Permutation& p) {
  std::vector<Box> out;
  for (int a = 1; a <= p.n(); ++a)
    for (int b = a + 1; b <= p.n(); ++b)
      if (p.position(a) > p.position(b))
        out.push_back({a, b});
  return out;
}

VertexSet inversion_vertex_set(const BoxDigraph& diagram, const Permutation& p) {
  return diagram.to_set(inversion_set(p));
}

Permutation permutation_from_inversions(int n, std::span<const Box> s) {
  const auto not_inversion_set = [] { return NotInitialSection("not an inversion set"); };
  std::vector<std::vector<bool>> inverted(static_cast<std::size_t>(n + 1),
                                          std::vector<bool>(static_cast<std::size_t>(n + 1)));
  for (const Box& c : s) {
    if (c.a < 1 || c.a >= c.b || c.b > n)
      throw not_inversion_set();
    inverted[static_cast<std::size_t>(c.a)][static_cast<std::size_t>(c.b)] = true;
  }
  // position of v = number of values placed before it
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (int v = 1; v <= n; ++v) {
    int before = 0;
    for (int u = 1; u <= n; ++u) {
      if (u < v)
        before += inverted[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ? 0 : 1;
      else if (u > v)
        before += inverted[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] ? 1 : 0;
    }
    if (w[static_cast<std::size_t>(before)] != 0)
      throw not_inversion_set();
    w[static_cast<std::size_t>(before)] = v;
  }
  Permutation p(std::move(w));
  std::vector<Box> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (inversion_set(p) != sorted)
    throw not_inversion_set();
  return p;
}

int d_sigma(const Permutation& p, const Box& box) {
  const int a = static_cast<int>(box.a);
  const int b = static_cast<int>(box.b);
  if (a < 1 || a >= b || b > p.n())
    throw InvalidArgument("box " + to_string(box) + " outside the staircase");
  if (p.position(a) > p.position(b))
    throw InvalidArgument("box " + to_string(box) + " is an inversion");
  int count = 0;
  for (int k = a + 1; k < b; ++k)
    count += p.position(a) < p.position(k) && p.position(k) < p.position(b) ? 1 : 0;
  return count;
}

bool adjacent(const Permutation& p, int a, int b) {
  if (a < 1 || b > p.n() || a >= b)
    return false;
  return p.position(b) == p.position(a) + 1;
}

CayleyBall<Permutation> weak_order_a(int n) {
  return weak_order_bfs(Permutation::identity(n), static_cast<std::size_t>(std::max(n - 1, 0)),
                        [](const Permutation& p, std::size_t i) {
                          return p.times_s(static_cast<int>(i) + 1);
                        });
}

} // namespace peeling
