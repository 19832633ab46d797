#include "peeling/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace peeling {

namespace {

void require_member(const ValuedDigraph& g, const InitialSection& a) {
  if (a.members().universe() != g.size() || !is_initial_section(g, a.members()))
    throw NotInitialSection("{" + g.format_set(a.members()) + "} is not an initial section");
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

} // namespace

std::vector<std::size_t> ISLattice::layer(std::size_t r) const {
  std::vector<std::size_t> out;
  if (r + 1 >= layer_start_.size())
    return out;
  for (std::size_t i = layer_start_[r]; i < layer_start_[r + 1]; ++i)
    out.push_back(i);
  return out;
}

std::size_t ISLattice::layer_size(std::size_t r) const {
  if (r + 1 >= layer_start_.size())
    return 0;
  return layer_start_[r + 1] - layer_start_[r];
}

std::size_t ISLattice::num_covers() const {
  std::size_t total = 0;
  for (const auto& u : up_)
    total += u.size();
  return total;
}

std::optional<std::size_t> ISLattice::index_of(const VertexSet& s) const {
  const auto it = index_.find(s);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

ISLattice build(const ValuedDigraph& g, const BuildOptions& options) {
  ISLattice lat;
  lat.g_ = g;
  lat.elements_.push_back(InitialSection::empty(g));
  lat.index_.emplace(g.empty_set(), 0);
  lat.layer_start_ = {0, 1};
  lat.up_.emplace_back();
  lat.down_.emplace_back();

  for (std::size_t r = 0;; ++r) {
    const std::size_t begin = lat.layer_start_[r];
    const std::size_t end = lat.layer_start_[r + 1];
    // children of the whole layer, keyed canonically so ids are independent
    // of discovery order
    std::map<VertexSet, std::vector<std::size_t>> next;
    for (std::size_t i = begin; i < end; ++i) {
      const PeelState state(g, lat.elements_[i]);
      for (VertexId v : state.erasable()) {
        VertexSet child = lat.elements_[i].members();
        child.insert(v);
        next[std::move(child)].push_back(i);
      }
    }
    if (next.empty())
      break;
    if (options.max_rank && r >= *options.max_rank) {
      lat.bounded_ = false;
      break;
    }
    if (lat.elements_.size() + next.size() > options.element_cap)
      throw CapExceeded("lattice has more than " + std::to_string(options.element_cap) +
                        " elements");
    for (auto& [set, parents] : next) {
      const std::size_t id = lat.elements_.size();
      lat.index_.emplace(set, id);
      lat.elements_.push_back(InitialSection::assume_valid(set));
      lat.up_.emplace_back();
      lat.down_.push_back(parents);
      for (std::size_t p : parents)
        lat.up_[p].push_back(id);
    }
    lat.layer_start_.push_back(lat.elements_.size());
  }
  return lat;
}

InitialSection meet(const ValuedDigraph& g, std::span<const InitialSection> s) {
  if (s.empty())
    throw InvalidArgument("meet of an empty family");
  VertexSet x = g.all_vertices();
  for (const auto& a : s) {
    require_member(g, a);
    x &= a.members();
  }
  PeelState state(g);
  for (bool progress = true; progress;) {
    progress = false;
    for (VertexId v : x.members()) {
      if (state.is_erasable(v)) {
        state.peel(v);
        x.erase(v);
        progress = true;
        break;
      }
    }
  }
  return InitialSection::assume_valid(state.peeled());
}

InitialSection meet(const ValuedDigraph& g, const InitialSection& a, const InitialSection& b) {
  const InitialSection pair[] = {a, b};
  return meet(g, pair);
}

InitialSection meet_bruteforce(const ISLattice& lattice, std::span<const InitialSection> s) {
  if (s.empty())
    throw InvalidArgument("meet of an empty family");
  std::vector<const InitialSection*> lower;
  for (const auto& c : lattice.elements())
    if (std::all_of(s.begin(), s.end(),
                    [&](const InitialSection& a) { return c.members().is_subset_of(a.members()); }))
      lower.push_back(&c);
  const auto* best = *std::max_element(lower.begin(), lower.end(),
                                       [](auto* l, auto* r) { return l->size() < r->size(); });
  for (const auto* c : lower)
    if (!c->members().is_subset_of(best->members()))
      throw Error("common lower bounds have no greatest element");
  return *best;
}

InitialSection join(const ISLattice& lattice, std::span<const InitialSection> s) {
  if (s.empty())
    throw InvalidArgument("join of an empty family");
  const ValuedDigraph& g = lattice.graph();
  VertexSet u = g.empty_set();
  for (const auto& a : s) {
    require_member(g, a);
    u |= a.members();
  }
  std::vector<InitialSection> upper;
  for (const auto& c : lattice.elements())
    if (u.is_subset_of(c.members()))
      upper.push_back(c);
  if (upper.empty())
    throw JoinUnavailable("no common upper bound of {" + g.format_set(u) +
                          "} in the built lattice");
  return meet(g, upper);
}

InitialSection join(const ISLattice& lattice, const InitialSection& a, const InitialSection& b) {
  const InitialSection pair[] = {a, b};
  return join(lattice, pair);
}

int MoebiusWitness::value() const {
  if (!(n_set == f_set))
    return 0;
  return n_set.size() % 2 == 0 ? 1 : -1;
}

MoebiusWitness moebius_witness(const ValuedDigraph& g, const InitialSection& a) {
  require_member(g, a);
  MoebiusWitness w{g.empty_set(), g.empty_set()};
  VertexSet rest = a.members();
  a.members().for_each([&](VertexId x) {
    if (g.theta(x) == 0)
      w.n_set.insert(x);
    rest.erase(x);
    if (is_initial_section(g, rest))
      w.f_set.insert(x);
    rest.insert(x);
  });
  return w;
}

int moebius(const ValuedDigraph& g, const InitialSection& a) {
  return moebius_witness(g, a).value();
}

int moebius(const ValuedDigraph& g, const InitialSection& b, const InitialSection& a) {
  require_member(g, b);
  require_member(g, a);
  if (!b.members().is_subset_of(a.members()))
    return 0;
  const Subdigraph rest = residual(g, b);
  VertexSet local = rest.graph.empty_set();
  for (std::size_t i = 0; i < rest.origin.size(); ++i)
    if (a.contains(rest.origin[i]))
      local.insert(static_cast<VertexId>(i));
  return moebius(rest.graph, InitialSection::checked(rest.graph, std::move(local)));
}

std::vector<InitialSection> interval_elements(const ValuedDigraph& g, const InitialSection& b,
                                              const InitialSection& a, std::size_t cap) {
  require_member(g, b);
  require_member(g, a);
  std::vector<InitialSection> out;
  if (!b.members().is_subset_of(a.members()))
    return out;
  out.push_back(b);
  std::size_t begin = 0;
  while (begin < out.size()) {
    const std::size_t end = out.size();
    std::map<VertexSet, bool> next;
    for (std::size_t i = begin; i < end; ++i) {
      const PeelState state(g, out[i]);
      for (VertexId v : state.erasable())
        if (a.contains(v)) {
          VertexSet child = out[i].members();
          child.insert(v);
          next.emplace(std::move(child), true);
        }
    }
    if (out.size() + next.size() > cap)
      throw CapExceeded("interval has more than " + std::to_string(cap) + " elements");
    for (auto& [set, _] : next)
      out.push_back(InitialSection::assume_valid(set));
    begin = end;
  }
  return out;
}

int moebius_oracle(const ValuedDigraph& g, const InitialSection& b, const InitialSection& a,
                   std::size_t cap) {
  const auto elems = interval_elements(g, b, a, cap);
  if (elems.empty())
    return 0;
  std::vector<long> mu(elems.size(), 0);
  mu[0] = 1;
  for (std::size_t i = 1; i < elems.size(); ++i) {
    long sum = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (elems[j].size() < elems[i].size() && elems[j].members().is_subset_of(elems[i].members()))
        sum += mu[j];
    mu[i] = -sum;
  }
  return static_cast<int>(mu.back());
}

int moebius_oracle(const ValuedDigraph& g, const InitialSection& a, std::size_t cap) {
  return moebius_oracle(g, InitialSection::empty(g), a, cap);
}

namespace {

struct ChainCounter {
  const ValuedDigraph& g;
  std::size_t cap;
  std::unordered_map<VertexSet, BigInt> memo;

  BigInt count(const VertexSet& s) {
    if (s.empty())
      return 1;
    if (const auto it = memo.find(s); it != memo.end())
      return it->second;
    BigInt total = 0;
    VertexSet rest = s;
    s.for_each([&](VertexId x) {
      rest.erase(x);
      if (is_initial_section(g, rest))
        total += count(rest);
      rest.insert(x);
    });
    if (memo.size() >= cap)
      throw CapExceeded("chain count memo exceeds " + std::to_string(cap) + " entries");
    memo.emplace(s, total);
    return total;
  }
};

} // namespace

BigInt maximal_chain_count(const ValuedDigraph& g, const InitialSection& a, std::size_t cap) {
  require_member(g, a);
  ChainCounter counter{g, cap, {}};
  return counter.count(a.members());
}

std::string to_dot(const ISLattice& lattice) {
  const ValuedDigraph& g = lattice.graph();
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t r = 0; r <= lattice.max_rank(); ++r) {
    out << "  { rank=same;";
    for (std::size_t i : lattice.layer(r))
      out << " n" << i << ';';
    out << " }\n";
  }
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const std::string label = g.format_set(lattice.element(i).members());
    out << "  n" << i << " [label=\"{" << escape_dot(label) << "}\"];\n";
  }
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j : lattice.up(i))
      out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const ISLattice& lattice, bool with_moebius) {
  const ValuedDigraph& g = lattice.graph();
  nlohmann::json elements = nlohmann::json::array();
  nlohmann::json ranks = nlohmann::json::array();
  nlohmann::json covers = nlohmann::json::array();
  nlohmann::json mu = nlohmann::json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    nlohmann::json labels = nlohmann::json::array();
    lattice.element(i).members().for_each([&](VertexId v) { labels.push_back(g.label(v)); });
    elements.push_back(labels);
    ranks.push_back(lattice.rank(i));
    for (std::size_t j : lattice.up(i))
      covers.push_back({i, j});
    if (with_moebius)
      mu.push_back(moebius(g, lattice.element(i)));
  }
  nlohmann::json out = {{"elements", elements},
                        {"ranks", ranks},
                        {"covers", covers},
                        {"bounded", lattice.bounded()}};
  if (with_moebius)
    out["moebius"] = mu;
  return out;
}

} // namespace peeling
