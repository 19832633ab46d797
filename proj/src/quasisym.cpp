#include "peeling/quasisym.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace peeling {

TruncatedPolynomial::TruncatedPolynomial(int m) : m_(m) {
  if (m < 0)
    throw InvalidArgument("number of variables must be non-negative");
}

TruncatedPolynomial TruncatedPolynomial::one(int m) {
  TruncatedPolynomial p(m);
  p.add(Exponents(static_cast<std::size_t>(m), 0));
  return p;
}

void TruncatedPolynomial::add(const Exponents& e, std::int64_t coef) {
  if (e.size() != static_cast<std::size_t>(m_))
    throw InvalidArgument("exponent vector has the wrong length");
  if (coef == 0)
    return;
  auto [it, inserted] = terms_.emplace(e, coef);
  if (!inserted) {
    if (__builtin_add_overflow(it->second, coef, &it->second))
      throw std::overflow_error("polynomial coefficient overflow");
    if (it->second == 0)
      terms_.erase(it);
  }
}

void TruncatedPolynomial::add_product(std::span<const int> variables, std::int64_t coef) {
  Exponents e(static_cast<std::size_t>(m_), 0);
  for (int v : variables) {
    if (v < 1 || v > m_)
      throw InvalidArgument("variable x" + std::to_string(v) + " out of range");
    ++e[static_cast<std::size_t>(v - 1)];
  }
  add(e, coef);
}

std::int64_t TruncatedPolynomial::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t TruncatedPolynomial::square_free_coefficient(int k) const {
  if (k > m_)
    return 0;
  Exponents e(static_cast<std::size_t>(m_), 0);
  std::fill(e.begin(), e.begin() + k, 1);
  return coefficient(e);
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& other) {
  if (other.m_ != m_)
    throw InvalidArgument("adding polynomials in different numbers of variables");
  for (const auto& [e, c] : other.terms_)
    add(e, c);
  return *this;
}

namespace {

int degree(const TruncatedPolynomial::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

std::string monomial(const TruncatedPolynomial::Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += "x" + std::to_string(i + 1);
    if (e[i] > 1)
      out += "^" + std::to_string(e[i]);
  }
  return out;
}

} // namespace

std::string TruncatedPolynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::vector<std::pair<Exponents, std::int64_t>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
    const int dl = degree(l.first);
    const int dr = degree(r.first);
    return dl != dr ? dl > dr : l.first > r.first;
  });
  std::string out;
  for (const auto& [e, c] : sorted) {
    const std::string mono = monomial(e);
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mono.empty())
      out += std::to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += std::to_string(mag) + "*" + mono;
  }
  return out;
}

nlohmann::json TruncatedPolynomial::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_)
    terms.push_back({{"exps", e}, {"coef", c}});
  return {{"m", m_}, {"terms", terms}};
}

std::ostream& operator<<(std::ostream& out, const TruncatedPolynomial& p) {
  return out << p.to_string();
}

std::string quasi_symmetry_violation(const TruncatedPolynomial& p) {
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      if (e[i] == 0 || e[i + 1] != 0)
        continue;
      auto shifted = e;
      std::swap(shifted[i], shifted[i + 1]);
      if (p.coefficient(shifted) != c)
        return "coefficient of " + monomial(e) + " is " + std::to_string(c) + " but " +
               monomial(shifted) + " has " + std::to_string(p.coefficient(shifted));
    }
  }
  return {};
}

std::string symmetry_violation(const TruncatedPolynomial& p) {
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      auto swapped = e;
      std::swap(swapped[i], swapped[i + 1]);
      if (p.coefficient(swapped) != c)
        return "coefficient of " + monomial(e) + " is " + std::to_string(c) + " but " +
               monomial(swapped) + " has " + std::to_string(p.coefficient(swapped));
    }
  }
  return {};
}

TruncatedPolynomial fundamental(const std::set<int>& x, int n, int m) {
  for (int j : x)
    if (j < 1 || j >= n)
      throw InvalidArgument("descent position " + std::to_string(j) + " outside [1,n-1]");
  TruncatedPolynomial out(m);
  std::vector<int> seq;
  auto rec = [&](auto&& self, int lo) -> void {
    if (static_cast<int>(seq.size()) == n) {
      out.add_product(seq);
      return;
    }
    for (int v = lo; v <= m; ++v) {
      seq.push_back(v);
      const int j = static_cast<int>(seq.size());
      self(self, x.count(j) ? v + 1 : v);
      seq.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

VertexId resolve_vertex(const ValuedDigraph& g, const std::string& token, std::size_t line) {
  if (auto v = g.find_label(token))
    return *v;
  try {
    std::size_t used = 0;
    const unsigned long id = std::stoul(token, &used);
    if (used == token.size() && id < g.size())
      return static_cast<VertexId>(id);
  } catch (const std::exception&) {
  }
  throw ParseError(line, "unknown vertex '" + token + "'");
}

} // namespace

Columns read_columns(std::istream& in, const ValuedDigraph& g) {
  Columns u(g.size(), g.empty_set());
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ss(raw);
    std::string keyword;
    if (!(ss >> keyword) || keyword[0] == '#')
      continue;
    if (keyword != "col")
      throw ParseError(line, "unknown keyword '" + keyword + "'");
    std::string z;
    if (!(ss >> z))
      throw ParseError(line, "expected 'col <vertex> <vertex>...'");
    const VertexId owner = resolve_vertex(g, z, line);
    for (std::string tok; ss >> tok;)
      u[owner].insert(resolve_vertex(g, tok, line));
  }
  return u;
}

Columns read_columns_file(const std::string& path, const ValuedDigraph& g) {
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open " + path);
  return read_columns(in, g);
}

bool is_compatible(const ValuedDigraph& g, const Columns& u, const Labeling& f,
                   std::span<const VertexId> sequence) {
  if (!is_peeling_sequence(g, sequence))
    return false;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const int fi = f[sequence[i]];
    if (fi < 1)
      return false;
    if (i + 1 < sequence.size() && fi > f[sequence[i + 1]])
      return false;
    for (std::size_t j = i + 1; j < sequence.size(); ++j)
      if (u[sequence[i]].contains(sequence[j]) && !(fi < f[sequence[j]]))
        return false;
  }
  return true;
}

namespace {

void require_columns(const ValuedDigraph& g, const Columns& u) {
  if (u.size() != g.size())
    throw InvalidArgument("need one column set per vertex");
  for (const auto& s : u)
    if (s.universe() != g.size())
      throw InvalidArgument("column set over the wrong vertex universe");
}

void require_member(const ValuedDigraph& g, const InitialSection& a) {
  if (a.members().universe() != g.size() || !is_initial_section(g, a.members()))
    throw NotInitialSection("{" + g.format_set(a.members()) + "} is not an initial section");
}

// Lower bound on f(v) forced by the values already placed.
int strict_bound(const PeelState& state, const Columns& u, const Labeling& f, VertexId v) {
  int lb = 1;
  state.peeled().for_each([&](VertexId z) {
    if (u[z].contains(v))
      lb = std::max(lb, f[z] + 1);
  });
  return lb;
}

} // namespace

std::vector<PeelingSequence> compatible_sequences(const ValuedDigraph& g, const InitialSection& a,
                                                  const Columns& u, const Labeling& f) {
  require_member(g, a);
  require_columns(g, u);
  std::vector<PeelingSequence> out;
  PeelState state(g);
  PeelingSequence prefix;
  auto rec = [&](auto&& self, int last) -> void {
    if (prefix.size() == a.size()) {
      out.push_back(prefix);
      return;
    }
    a.members().for_each([&](VertexId v) {
      if (!state.is_erasable(v) || f[v] < last || f[v] < strict_bound(state, u, f, v))
        return;
      state.peel(v);
      prefix.push_back(v);
      self(self, f[v]);
      prefix.pop_back();
      state.unpeel(v);
    });
  };
  rec(rec, 1);
  return out;
}

std::vector<Labeling> semi_standard_functions(const ValuedDigraph& g, const InitialSection& a,
                                              const Columns& u, int m, std::size_t cap) {
  require_member(g, a);
  require_columns(g, u);
  std::set<Labeling> complete;
  std::set<Labeling> visited; // partial labelings already expanded
  Labeling f(g.size(), 0);
  PeelState state(g);
  std::size_t placed = 0;
  auto rec = [&](auto&& self, int last) -> void {
    if (placed == a.size()) {
      complete.insert(f);
      if (complete.size() > cap)
        throw CapExceeded("more than " + std::to_string(cap) + " semi-standard functions");
      return;
    }
    a.members().for_each([&](VertexId v) {
      if (!state.is_erasable(v))
        return;
      for (int val = std::max(last, strict_bound(state, u, f, v)); val <= m; ++val) {
        f[v] = val;
        if (visited.insert(f).second) {
          if (visited.size() > 4 * cap)
            throw CapExceeded("semi-standard search exceeds " + std::to_string(4 * cap) +
                              " partial functions");
          state.peel(v);
          ++placed;
          self(self, val);
          --placed;
          state.unpeel(v);
        }
        f[v] = 0;
      }
    });
  };
  rec(rec, 1);
  return {complete.begin(), complete.end()};
}

namespace {

TruncatedPolynomial sum_labelings(const std::vector<Labeling>& fs, int m) {
  TruncatedPolynomial out(m);
  for (const Labeling& f : fs) {
    std::vector<int> vars;
    for (int v : f)
      if (v > 0)
        vars.push_back(v);
    out.add_product(vars);
  }
  return out;
}

} // namespace

TruncatedPolynomial gamma(const ValuedDigraph& g, const InitialSection& a, const Columns& u, int m,
                          std::size_t cap) {
  return sum_labelings(semi_standard_functions(g, a, u, m, cap), m);
}

TruncatedPolynomial gamma_oracle(const ValuedDigraph& g, const InitialSection& a,
                                 const Columns& u, int m) {
  require_member(g, a);
  require_columns(g, u);
  const auto members = a.members().members();
  const auto sequences = peeling_sequences(g, a);
  std::vector<Labeling> accepted;
  Labeling f(g.size(), 0);
  for (VertexId v : members)
    f[v] = 1;
  while (true) {
    for (const auto& seq : sequences)
      if (is_compatible(g, u, f, seq)) {
        accepted.push_back(f);
        break;
      }
    std::size_t i = 0;
    while (i < members.size() && ++f[members[i]] > m)
      f[members[i++]] = 1;
    if (i == members.size())
      break;
  }
  return sum_labelings(accepted, m);
}

namespace {

void require_labeling(const FinitePoset& p, const std::vector<int>& label) {
  std::vector<int> sorted = label;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1 || sorted.size() != p.size())
      throw InvalidArgument("labeling must be a bijection onto 1..k");
}

} // namespace

Columns p_partition_columns(const FinitePoset& p, const std::vector<int>& label) {
  require_labeling(p, label);
  Columns u(p.size(), VertexSet(p.size()));
  for (std::size_t z = 0; z < p.size(); ++z)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (label[z] > label[y])
        u[z].insert(static_cast<VertexId>(y));
  return u;
}

TruncatedPolynomial gamma_p_partition(const FinitePoset& p, const std::vector<int>& label, int m) {
  require_labeling(p, label);
  TruncatedPolynomial out(m);
  for (const auto& ext : linear_extensions(p)) {
    std::set<int> descents;
    for (std::size_t j = 0; j + 1 < ext.size(); ++j)
      if (label[ext[j]] > label[ext[j + 1]])
        descents.insert(static_cast<int>(j) + 1);
    out += fundamental(descents, static_cast<int>(p.size()), m);
  }
  return out;
}

TruncatedPolynomial gamma_p_partition_columns(const FinitePoset& p, const std::vector<int>& label,
                                              int m) {
  const ValuedDigraph g = build_downset(p);
  return gamma(g, InitialSection::full(g), p_partition_columns(p, label), m);
}

std::vector<std::vector<int>> reduced_words(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  auto rec = [&](auto&& self, const Permutation& q) -> void {
    bool identity = true;
    for (int i = 1; i < q.n(); ++i) {
      if (q(i) > q(i + 1)) {
        identity = false;
        suffix.push_back(i);
        self(self, q.times_s(i));
        suffix.pop_back();
      }
    }
    if (identity)
      out.emplace_back(suffix.rbegin(), suffix.rend());
  };
  rec(rec, p);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> reduced_words(const AffinePermutation& p, std::size_t cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  auto rec = [&](auto&& self, const AffinePermutation& q) -> void {
    bool identity = true;
    for (int i = 1; i <= q.n(); ++i) {
      if (q(i) > q(i + 1)) {
        identity = false;
        suffix.push_back(i);
        self(self, q.times_s(i));
        suffix.pop_back();
      }
    }
    if (identity) {
      if (out.size() >= cap)
        throw CapExceeded("more than " + std::to_string(cap) + " reduced words");
      out.emplace_back(suffix.rbegin(), suffix.rend());
    }
  };
  rec(rec, p);
  std::sort(out.begin(), out.end());
  return out;
}

TruncatedPolynomial stanley(const Permutation& p, int m) {
  TruncatedPolynomial out(m);
  for (const auto& word : reduced_words(p)) {
    std::vector<int> r;
    auto rec = [&](auto&& self, int lo) -> void {
      const std::size_t j = r.size();
      if (j == word.size()) {
        out.add_product(r);
        return;
      }
      for (int v = lo; v <= m; ++v) {
        r.push_back(v);
        self(self, j + 1 < word.size() && word[j] < word[j + 1] ? v + 1 : v);
        r.pop_back();
      }
    };
    rec(rec, 1);
  }
  return out;
}

namespace {

int mod_letter(long x, int n) {
  const long r = ((x - 1) % n + n) % n;
  return static_cast<int>(r) + 1;
}

} // namespace

bool is_cyclically_decreasing_word(std::span<const int> word, int n) {
  std::vector<int> where(static_cast<std::size_t>(n + 1), -1);
  for (std::size_t p = 0; p < word.size(); ++p) {
    const int j = word[p];
    if (j < 1 || j > n || where[static_cast<std::size_t>(j)] >= 0)
      return false;
    where[static_cast<std::size_t>(j)] = static_cast<int>(p);
  }
  for (int j = 1; j <= n; ++j) {
    const int next = mod_letter(j + 1, n);
    const int pj = where[static_cast<std::size_t>(j)];
    const int pn = where[static_cast<std::size_t>(next)];
    if (pj >= 0 && pn >= 0 && pn > pj)
      return false;
  }
  return true;
}

bool is_cyclically_decreasing(const AffinePermutation& p) {
  if (length_affine(p) >= static_cast<std::size_t>(p.n()))
    return false;
  for (const auto& word : reduced_words(p))
    if (is_cyclically_decreasing_word(word, p.n()))
      return true;
  return false;
}

std::vector<AffinePermutation> cyclically_decreasing_elements(int n) {
  std::set<AffinePermutation> found;
  for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
    std::vector<int> letters;
    for (int j = 1; j <= n; ++j)
      if ((mask >> (j - 1)) & 1u)
        letters.push_back(j);
    do {
      if (!is_cyclically_decreasing_word(letters, n))
        continue;
      AffinePermutation v = AffinePermutation::identity(n);
      for (int j : letters)
        v = v.times_s(j);
      if (length_affine(v) != letters.size())
        throw std::logic_error("cyclically decreasing word is not reduced");
      found.insert(v);
      break;
    } while (std::next_permutation(letters.begin(), letters.end()));
  }
  return {found.begin(), found.end()};
}

TruncatedPolynomial affine_stanley(const AffinePermutation& p, int m, std::size_t cap) {
  TruncatedPolynomial out(m);
  if (m < 1) {
    if (length_affine(p) == 0)
      out.add({});
    return out;
  }
  const auto elements = cyclically_decreasing_elements(p.n());
  const std::set<AffinePermutation> lookup(elements.begin(), elements.end());
  std::vector<std::size_t> lengths;
  for (const auto& v : elements)
    lengths.push_back(length_affine(v));
  std::vector<int> exps;
  std::size_t visited = 0;
  auto rec = [&](auto&& self, const AffinePermutation& rest, std::size_t len) -> void {
    if (++visited > cap)
      throw CapExceeded("more than " + std::to_string(cap) + " partial factorizations");
    if (static_cast<int>(exps.size()) == m - 1) {
      if (lookup.count(rest)) {
        exps.push_back(static_cast<int>(len));
        out.add(exps);
        exps.pop_back();
      }
      return;
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (lengths[i] > len)
        continue;
      const AffinePermutation next = elements[i].inverse() * rest;
      if (length_affine(next) != len - lengths[i])
        continue;
      exps.push_back(static_cast<int>(lengths[i]));
      self(self, next, len - lengths[i]);
      exps.pop_back();
    }
  };
  rec(rec, p, length_affine(p));
  return out;
}

Columns columns_a(const BoxDigraph& staircase) {
  Columns u(staircase.size(), VertexSet(staircase.size()));
  for (std::size_t z = 0; z < staircase.size(); ++z)
    for (std::size_t y = 0; y < staircase.size(); ++y)
      if (staircase.box(static_cast<VertexId>(y)).a == staircase.box(static_cast<VertexId>(z)).a)
        u[z].insert(static_cast<VertexId>(y));
  return u;
}

Columns columns_affine(const BoxDigraph& window) {
  // window boxes (a,k) never have k = a mod n, so a column is just a fixed a
  return columns_a(window);
}

BoxLabeling to_box_labeling(const BoxDigraph& diagram, const Labeling& f) {
  BoxLabeling out;
  for (std::size_t v = 0; v < f.size(); ++v)
    if (f[v] > 0)
      out.emplace(diagram.box(static_cast<VertexId>(v)), f[v]);
  return out;
}

Labeling to_labeling(const BoxDigraph& diagram, const BoxLabeling& f) {
  Labeling out(diagram.size(), 0);
  for (const auto& [c, v] : f)
    out[diagram.id(c)] = v;
  return out;
}

Box leading_cell(const BoxLabeling& f, const Permutation& p) {
  if (f.empty())
    throw InvalidArgument("leading cell of an empty labeling");
  const Box* best = nullptr;
  int best_value = 0;
  for (const auto& [c, v] : f) {
    if (!best || v > best_value ||
        (v == best_value && p.position(static_cast<int>(c.a)) < p.position(static_cast<int>(best->a)))) {
      best = &c;
      best_value = v;
    }
  }
  return *best;
}

WordWithWeights psi_a(const BoxLabeling& f, const Permutation& p) {
  const BoxDigraph staircase = build_a(p.n());
  std::vector<Box> cells;
  for (const auto& [c, v] : f)
    cells.push_back(c);
  if (cells != inversion_set(p))
    throw InvalidArgument("labeling domain is not the inversion set");
  const auto& g = staircase.graph();
  const InitialSection a = InitialSection::checked(g, staircase.to_set(cells));
  if (compatible_sequences(g, a, columns_a(staircase), to_labeling(staircase, f)).empty())
    throw InvalidArgument("labeling is not semi-standard");

  WordWithWeights out;
  BoxLabeling rest = f;
  Permutation sigma = p;
  while (!rest.empty()) {
    const Box c = leading_cell(rest, sigma);
    const int i = sigma.position(static_cast<int>(c.b));
    if (sigma.position(static_cast<int>(c.a)) != i + 1)
      throw std::logic_error("leading cell " + to_string(c) + " is not a descent pair");
    out.word.push_back(i);
    out.weights.push_back(rest.at(c));
    rest.erase(c);
    sigma = sigma.times_s(i);
  }
  std::reverse(out.word.begin(), out.word.end());
  std::reverse(out.weights.begin(), out.weights.end());
  return out;
}

BoxLabeling psi_a_inverse(const WordWithWeights& ww, int n) {
  if (ww.word.size() != ww.weights.size())
    throw InvalidArgument("word and weights differ in length");
  BoxLabeling f;
  Permutation sigma = Permutation::identity(n);
  for (std::size_t j = 0; j < ww.word.size(); ++j) {
    const int i = ww.word[j];
    const int x = sigma(i);
    const int y = sigma(i + 1);
    if (x > y)
      throw InvalidArgument("word is not reduced");
    f[Box{x, y}] = ww.weights[j];
    sigma = sigma.times_s(i);
  }
  return f;
}

std::vector<AffinePermutation> affine_factorization(const BoxDigraph& window, int n,
                                                    const Labeling& f,
                                                    std::span<const VertexId> sequence, int m) {
  std::vector<AffinePermutation> factors(static_cast<std::size_t>(m), AffinePermutation::identity(n));
  AffinePermutation sigma = AffinePermutation::identity(n);
  int last = 1;
  for (VertexId v : sequence) {
    const Box& c = window.box(v);
    const int k = f[v];
    if (k < last || k > m)
      throw InvalidArgument("labeling is not weakly increasing along the sequence");
    last = k;
    if (!affine_adjacent(sigma, c.a, c.b))
      throw InvalidArgument("sequence is not a peeling sequence");
    const int i = mod_letter(sigma.position(c.a), n);
    auto& factor = factors[static_cast<std::size_t>(k - 1)];
    factor = factor.times_s(i);
    sigma = sigma.times_s(i);
  }
  return factors;
}

} // namespace peeling
