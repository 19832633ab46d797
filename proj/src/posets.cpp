#include "peeling/posets.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <random>
#include <sstream>

namespace peeling {

FinitePoset::FinitePoset(std::size_t k,
                         const std::vector<std::pair<std::size_t, std::size_t>>& relations,
                         bool close, std::vector<std::string> labels)
    : leq_(k, std::vector<bool>(k, false)), labels_(std::move(labels)) {
  if (labels_.empty())
    for (std::size_t x = 0; x < k; ++x)
      labels_.push_back(std::to_string(x));
  if (labels_.size() != k)
    throw InvalidArgument("label count differs from poset size");
  for (std::size_t x = 0; x < k; ++x)
    leq_[x][x] = true;
  for (const auto& [x, y] : relations) {
    if (x >= k || y >= k)
      throw InvalidArgument("relation mentions an unknown element");
    leq_[x][y] = true;
  }
  if (close) {
    for (std::size_t m = 0; m < k; ++m)
      for (std::size_t x = 0; x < k; ++x)
        if (leq_[x][m])
          for (std::size_t y = 0; y < k; ++y)
            if (leq_[m][y])
              leq_[x][y] = true;
  }
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      if (x != y && leq_[x][y] && leq_[y][x])
        throw InvalidArgument("relation is not antisymmetric at " + labels_[x] + ", " + labels_[y]);
      if (leq_[x][y])
        for (std::size_t z = 0; z < k; ++z)
          if (leq_[y][z] && !leq_[x][z])
            throw InvalidArgument("relation is not transitive: " + labels_[x] + " <= " +
                                  labels_[y] + " <= " + labels_[z]);
    }
}

FinitePoset read_poset(std::istream& in, bool covers_only) {
  std::string raw;
  std::size_t line = 0;
  std::optional<std::size_t> k;
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  auto parse_id = [&](const std::string& tok) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(tok, &used);
      if (used != tok.size() || v >= *k)
        throw std::out_of_range(tok);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw ParseError(line, "bad element id '" + tok + "'");
    }
  };
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ss(raw);
    std::string keyword;
    if (!(ss >> keyword) || keyword[0] == '#')
      continue;
    std::vector<std::string> args;
    for (std::string tok; ss >> tok;)
      args.push_back(tok);
    if (keyword == "poset") {
      if (k || args.size() != 1)
        throw ParseError(line, "expected a single 'poset <k>' header");
      try {
        k = std::stoul(args[0]);
      } catch (const std::exception&) {
        throw ParseError(line, "bad element count '" + args[0] + "'");
      }
      for (std::size_t x = 0; x < *k; ++x)
        labels.push_back(std::to_string(x));
    } else if (!k) {
      throw ParseError(line, "missing 'poset <k>' header");
    } else if (keyword == "element") {
      if (args.empty() || args.size() > 2)
        throw ParseError(line, "expected 'element <id> [label]'");
      const std::size_t id = parse_id(args[0]);
      if (args.size() == 2)
        labels[id] = args[1];
    } else if (keyword == "rel") {
      if (args.size() != 2)
        throw ParseError(line, "expected 'rel <x> <y>'");
      rel.emplace_back(parse_id(args[0]), parse_id(args[1]));
    } else {
      throw ParseError(line, "unknown keyword '" + keyword + "'");
    }
  }
  if (!k)
    throw ParseError(line, "missing 'poset <k>' header");
  try {
    return FinitePoset(*k, rel, covers_only, labels);
  } catch (const InvalidArgument& e) {
    throw ParseError(line, e.what());
  }
}

FinitePoset read_poset_file(const std::string& path, bool covers_only) {
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open " + path);
  return read_poset(in, covers_only);
}

namespace {

DigraphDescription order_digraph(const FinitePoset& p) {
  DigraphDescription d;
  d.labels = p.labels();
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.less(x, y))
        d.arcs.emplace_back(static_cast<VertexId>(x), static_cast<VertexId>(y));
  return d;
}

} // namespace

ValuedDigraph build_downset(const FinitePoset& p) {
  DigraphDescription d = order_digraph(p);
  d.theta.assign(p.size(), 0);
  return ValuedDigraph(d);
}

ValuedDigraph build_upset(const FinitePoset& p) {
  DigraphDescription d = order_digraph(p);
  d.theta.assign(p.size(), 0);
  for (const auto& arc : d.arcs)
    ++d.theta[arc.first];
  return ValuedDigraph(d);
}

std::vector<std::vector<VertexId>> linear_extensions(const FinitePoset& p) {
  std::vector<VertexId> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<VertexId>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < order.size() && ok; ++i)
      for (std::size_t j = i + 1; j < order.size() && ok; ++j)
        ok = !p.less(order[j], order[i]);
    if (ok)
      out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

bool is_lower_set(const FinitePoset& p, const VertexSet& s) {
  for (std::size_t y = 0; y < p.size(); ++y)
    if (s.contains(static_cast<VertexId>(y)))
      for (std::size_t x = 0; x < p.size(); ++x)
        if (p.leq(x, y) && !s.contains(static_cast<VertexId>(x)))
          return false;
  return true;
}

bool is_upper_set(const FinitePoset& p, const VertexSet& s) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (s.contains(static_cast<VertexId>(x)))
      for (std::size_t y = 0; y < p.size(); ++y)
        if (p.leq(x, y) && !s.contains(static_cast<VertexId>(y)))
          return false;
  return true;
}

std::vector<VertexSet> lower_sets(const FinitePoset& p) {
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.size()); ++mask) {
    VertexSet s(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
      if ((mask >> x) & 1u)
        s.insert(static_cast<VertexId>(x));
    if (is_lower_set(p, s))
      out.push_back(std::move(s));
  }
  return out;
}

FinitePoset random_poset(std::size_t k, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (coin(rng))
        rel.emplace_back(order[i], order[j]);
  return FinitePoset(k, rel, true);
}

} // namespace peeling
