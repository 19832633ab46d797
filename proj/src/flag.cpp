#include "peeling/flag.hpp"

#include <algorithm>
#include <sstream>

namespace peeling {

namespace {

long floor_div(long x, long d) {
  const long q = x / d;
  return (x % d != 0 && (x < 0) != (d < 0)) ? q - 1 : q;
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (tok.find_first_not_of(" \t", used) != std::string::npos)
        throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse '" + text + "'");
    }
  }
  return out;
}

} // namespace

void ColoredPermutation::validate() const {
  if (r < 2)
    throw InvalidArgument("colored permutations need r >= 2");
  if (colors.size() != perm.window().size())
    throw InvalidArgument("color count differs from permutation size");
  for (int c : colors)
    if (c < 0 || c >= r)
      throw InvalidArgument("color " + std::to_string(c) + " outside [0," + std::to_string(r - 1) +
                            "]");
}

ColoredPermutation ColoredPermutation::identity(int r, int n) {
  return ColoredPermutation{r, std::vector<int>(static_cast<std::size_t>(n), 0),
                            Permutation::identity(n)};
}

ColoredPermutation ColoredPermutation::operator*(const ColoredPermutation& other) const {
  if (other.r != r || other.n() != n())
    throw InvalidArgument("colored permutation shapes differ");
  ColoredPermutation out{r, {}, perm * other.perm};
  for (int i = 1; i <= n(); ++i)
    out.colors.push_back((colors[static_cast<std::size_t>(other.perm(i) - 1)] +
                          other.colors[static_cast<std::size_t>(i - 1)]) %
                         r);
  return out;
}

std::string format(const ColoredPermutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.colors.size(); ++i)
    out += (i ? "," : "") + std::to_string(p.colors[i]);
  return out + " | " + format(p.perm);
}

ColoredPermutation parse_colored_permutation(const std::string& text, int r) {
  const auto bar = text.find('|');
  if (bar == std::string::npos)
    throw InvalidArgument("expected 'colors | window', got '" + text + "'");
  ColoredPermutation p{r, parse_list(text.substr(0, bar)),
                       Permutation(parse_list(text.substr(bar + 1)))};
  p.validate();
  return p;
}

std::vector<ColoredPermutation> all_colored_permutations(int r, int n) {
  std::vector<ColoredPermutation> out;
  for (const Permutation& sigma : all_permutations(n)) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    while (true) {
      out.push_back({r, c, sigma});
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == r)
        c[i++] = 0;
      if (i == c.size())
        break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const FlagGenerator& g) {
  return (g.kind == FlagGenerator::Kind::a ? "a" : "b") + std::to_string(g.index);
}

std::vector<FlagGenerator> flag_generators(int n) {
  std::vector<FlagGenerator> out;
  for (int i = 1; i < n; ++i)
    out.push_back({FlagGenerator::Kind::a, i});
  for (int i = 1; i <= n; ++i)
    out.push_back({FlagGenerator::Kind::b, i});
  return out;
}

namespace {

void check_generator(int n, const FlagGenerator& g) {
  const int top = g.kind == FlagGenerator::Kind::a ? n - 1 : n;
  if (g.index < 1 || g.index > top)
    throw InvalidArgument("generator " + to_string(g) + " out of range");
}

} // namespace

ColoredPermutation generator_element(int r, int n, const FlagGenerator& g) {
  check_generator(n, g);
  ColoredPermutation e = ColoredPermutation::identity(r, n);
  if (g.kind == FlagGenerator::Kind::a)
    e.perm = e.perm.times_s(g.index);
  e.colors[static_cast<std::size_t>(g.index - 1)] = 1;
  return e;
}

ColoredPermutation apply(const ColoredPermutation& p, const FlagGenerator& g) {
  return p * generator_element(p.r, p.n(), g);
}

bool is_flag_cover(const ColoredPermutation& p, const FlagGenerator& g) {
  check_generator(p.n(), g);
  const auto color = [&](int i) { return p.colors[static_cast<std::size_t>(i - 1)]; };
  if (g.kind == FlagGenerator::Kind::b)
    return color(g.index) != p.r - 1;
  return color(g.index + 1) == p.r - 1 && p.perm(g.index) < p.perm(g.index + 1);
}

std::size_t finv(const ColoredPermutation& p) {
  std::size_t total = static_cast<std::size_t>(p.r) * length(p.perm);
  for (int c : p.colors)
    total += static_cast<std::size_t>(c);
  return total;
}

BoxDigraph build_flag(int r, int n) {
  if (r < 2)
    throw InvalidArgument("flag digraph needs r >= 2 (use type-a for r = 1)");
  if (n < 1)
    throw InvalidArgument("flag digraph needs n >= 1");
  const long R = r;
  std::vector<Box> boxes = build_a(n).boxes();
  for (long b = 1; b <= n; ++b)
    for (long a = -b * (R - 1); a <= -1; ++a)
      boxes.push_back({a, b});
  auto hook = [R](const Box& c) {
    std::vector<Box> out;
    if (c.a > 0) {
      for (long k = c.a + 1; k < c.b; ++k) {
        out.push_back({c.a, k});
        out.push_back({k, c.b});
      }
    } else {
      for (long x = c.a + 1; x <= -1; ++x)
        out.push_back({x, c.b});
      for (long x = 1; x < c.b; ++x)
        out.push_back({x, c.b});
    }
    return out;
  };
  auto theta = [R](const Box& c) {
    return c.a > 0 ? c.b - c.a - 1 : c.b + floor_div(c.a, R - 1);
  };
  return BoxDigraph(std::move(boxes), hook, theta);
}

ColoredPermutation psi(const BoxDigraph& diagram, int r, const VertexSet& u) {
  if (!is_initial_section(diagram.graph(), u))
    throw NotInitialSection("not an initial section of the flag digraph");
  std::vector<Box> a_part;
  long n = 0;
  for (const Box& c : diagram.boxes())
    n = std::max(n, c.b);
  std::vector<long> rows_a(static_cast<std::size_t>(n + 1), 0);
  std::vector<long> rows_b(static_cast<std::size_t>(n + 1), 0);
  for (const Box& c : diagram.to_boxes(u)) {
    if (c.a > 0) {
      a_part.push_back(c);
      ++rows_a[static_cast<std::size_t>(c.b)];
    } else {
      ++rows_b[static_cast<std::size_t>(c.b)];
    }
  }
  ColoredPermutation p{r, std::vector<int>(static_cast<std::size_t>(n), 0),
                       permutation_from_inversions(static_cast<int>(n), a_part)};
  for (long i = 1; i <= n; ++i) {
    const long c = rows_b[static_cast<std::size_t>(i)] - (r - 1) * rows_a[static_cast<std::size_t>(i)];
    if (c < 0 || c > r - 1)
      throw NotInitialSection("row " + std::to_string(i) + " gives color " + std::to_string(c));
    p.colors[static_cast<std::size_t>(p.perm.position(static_cast<int>(i)) - 1)] = static_cast<int>(c);
  }
  return p;
}

VertexSet psi_inverse(const BoxDigraph& diagram, const ColoredPermutation& p) {
  p.validate();
  std::vector<Box> boxes = inversion_set(p.perm);
  std::vector<long> rows_a(static_cast<std::size_t>(p.n() + 1), 0);
  for (const Box& c : boxes)
    ++rows_a[static_cast<std::size_t>(c.b)];
  for (long i = 1; i <= p.n(); ++i) {
    const long filled = (p.r - 1) * rows_a[static_cast<std::size_t>(i)] +
                        p.colors[static_cast<std::size_t>(p.perm.position(static_cast<int>(i)) - 1)];
    const long left = -i * (p.r - 1);
    for (long x = left; x < left + filled; ++x)
      boxes.push_back({x, i});
  }
  return diagram.to_set(boxes);
}

} // namespace peeling
