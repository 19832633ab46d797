#include "peeling/digraph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>
#include <sstream>

namespace peeling {

ValidationReport validate(const DigraphDescription& d) {
  ValidationReport report;
  const std::size_t n = d.theta.size();
  auto fail = [&](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };

  if (!d.labels.empty() && d.labels.size() != n)
    fail("label count " + std::to_string(d.labels.size()) + " does not match vertex count " +
         std::to_string(n));

  std::vector<std::size_t> out_degree(n, 0);
  std::vector<std::vector<VertexId>> out(n);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& [src, dst] : d.arcs) {
    const std::string arc = "(" + std::to_string(src) + "," + std::to_string(dst) + ")";
    if (src >= n || dst >= n) {
      fail("arc " + arc + " references an unknown vertex");
      continue;
    }
    if (src == dst) {
      fail("self-loop " + arc);
      continue;
    }
    if (!seen.insert({src, dst}).second) {
      fail("duplicate arc " + arc);
      continue;
    }
    ++out_degree[src];
    out[src].push_back(dst);
  }

  // Kahn's algorithm; smallest available id first so the witness is stable.
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (VertexId w : out[v])
      ++indeg[w];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0)
      ready.push(static_cast<VertexId>(v));
  std::vector<VertexId> order;
  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (VertexId w : out[v])
      if (--indeg[w] == 0)
        ready.push(w);
  }
  if (order.size() != n)
    fail("directed cycle through " + std::to_string(n - order.size()) + " vertices");
  else
    report.topological_order = std::move(order);

  for (std::size_t v = 0; v < n; ++v) {
    const long t = d.theta[v];
    if (t < 0 || static_cast<std::size_t>(t) > out_degree[v])
      fail("theta(" + std::to_string(v) + ")=" + std::to_string(t) + " outside [0, d+=" +
           std::to_string(out_degree[v]) + "]");
  }
  if (!report.valid)
    report.topological_order.clear();
  return report;
}

ValuedDigraph::ValuedDigraph(const DigraphDescription& d) {
  const ValidationReport report = validate(d);
  if (!report.valid) {
    std::string msg = "invalid valued digraph:";
    for (const auto& v : report.violations)
      msg += " " + v + ";";
    throw InvalidDigraph(msg);
  }
  const std::size_t n = d.theta.size();
  theta_.reserve(n);
  for (long t : d.theta)
    theta_.push_back(static_cast<int>(t));
  labels_ = d.labels;
  if (labels_.empty())
    for (std::size_t v = 0; v < n; ++v)
      labels_.push_back(std::to_string(v));
  out_.assign(n, {});
  in_.assign(n, {});
  for (const auto& [src, dst] : d.arcs) {
    out_[src].push_back(dst);
    in_[dst].push_back(src);
  }
  out_sets_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(out_[v].begin(), out_[v].end());
    std::sort(in_[v].begin(), in_[v].end());
    out_sets_.emplace_back(n, out_[v]);
  }
  num_arcs_ = d.arcs.size();
}

std::optional<VertexId> ValuedDigraph::find_label(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

VertexSet ValuedDigraph::all_vertices() const {
  VertexSet s(size());
  for (std::size_t v = 0; v < size(); ++v)
    s.insert(static_cast<VertexId>(v));
  return s;
}

DigraphDescription ValuedDigraph::description() const {
  DigraphDescription d;
  d.theta.assign(theta_.begin(), theta_.end());
  d.labels = labels_;
  for (std::size_t v = 0; v < size(); ++v)
    for (VertexId w : out_[v])
      d.arcs.emplace_back(static_cast<VertexId>(v), w);
  return d;
}

std::string ValuedDigraph::format_set(const VertexSet& s) const {
  std::string out;
  s.for_each([&](VertexId v) {
    if (!out.empty())
      out += ' ';
    out += labels_[v];
  });
  return out;
}

InitialSection InitialSection::checked(const ValuedDigraph& g, VertexSet members) {
  if (members.universe() != g.size())
    throw NotInitialSection("vertex set universe does not match the digraph");
  if (!is_initial_section(g, members))
    throw NotInitialSection("{" + g.format_set(members) + "} is not an initial section");
  return InitialSection(std::move(members));
}

PeelState::PeelState(const ValuedDigraph& g)
    : g_(&g), peeled_(g.size()), theta_(g.thetas()) {}

PeelState::PeelState(const ValuedDigraph& g, const InitialSection& a)
    : g_(&g), peeled_(a.members()), theta_(g.thetas()) {
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!peeled_.contains(static_cast<VertexId>(v)))
      theta_[v] -= static_cast<int>(g.out_set(static_cast<VertexId>(v)).intersection_size(peeled_));
}

bool PeelState::is_erasable(VertexId v) const {
  if (peeled_.contains(v) || theta_[v] != 0)
    return false;
  for (VertexId z : g_->in(v))
    if (!peeled_.contains(z) && theta_[z] == 0)
      return false;
  return true;
}

void PeelState::peel(VertexId v) {
  if (!is_erasable(v))
    throw NotErasable("vertex " + g_->label(v) + " is not erasable");
  peeled_.insert(v);
  for (VertexId z : g_->in(v))
    if (!peeled_.contains(z))
      --theta_[z];
}

void PeelState::unpeel(VertexId v) {
  peeled_.erase(v);
  for (VertexId z : g_->in(v))
    if (!peeled_.contains(z))
      ++theta_[z];
}

std::vector<VertexId> PeelState::erasable() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < g_->size(); ++v)
    if (is_erasable(static_cast<VertexId>(v)))
      out.push_back(static_cast<VertexId>(v));
  return out;
}

namespace {

void require_vertex(const ValuedDigraph& g, VertexId v) {
  if (!g.contains(v))
    throw UnknownVertex("unknown vertex " + std::to_string(v));
}

Subdigraph restrict_to(const ValuedDigraph& g, const VertexSet& removed,
                       const std::vector<int>& theta) {
  std::vector<VertexId> origin;
  std::vector<VertexId> new_id(g.size(), 0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (removed.contains(static_cast<VertexId>(v)))
      continue;
    new_id[v] = static_cast<VertexId>(origin.size());
    origin.push_back(static_cast<VertexId>(v));
  }
  DigraphDescription d;
  for (VertexId v : origin) {
    d.theta.push_back(theta[v]);
    d.labels.push_back(g.label(v));
  }
  for (VertexId v : origin)
    for (VertexId w : g.out(v))
      if (!removed.contains(w))
        d.arcs.emplace_back(new_id[v], new_id[w]);
  return Subdigraph{ValuedDigraph(d), std::move(origin)};
}

} // namespace

std::size_t out_degree(const ValuedDigraph& g, VertexId v) {
  require_vertex(g, v);
  return g.out(v).size();
}

bool is_erasable(const ValuedDigraph& g, VertexId v) {
  require_vertex(g, v);
  return PeelState(g).is_erasable(v);
}

Subdigraph peel(const ValuedDigraph& g, VertexId v) {
  require_vertex(g, v);
  PeelState state(g);
  state.peel(v);
  std::vector<int> theta(g.size());
  for (std::size_t x = 0; x < g.size(); ++x)
    theta[x] = state.theta(static_cast<VertexId>(x));
  return restrict_to(g, state.peeled(), theta);
}

bool is_initial_section(const ValuedDigraph& g, const VertexSet& s) {
  if (s.universe() != g.size())
    return false;
  for (std::size_t x = 0; x < g.size(); ++x) {
    const auto v = static_cast<VertexId>(x);
    const auto inside = static_cast<int>(g.out_set(v).intersection_size(s));
    if (s.contains(v) ? g.theta(v) > inside : g.theta(v) < inside)
      return false;
  }
  return true;
}

#ifndef NDEBUG
namespace {

// Greedy replay of the peeling process inside `a`, picking the smallest or
// largest erasable id at each step.
std::vector<int> replay_theta(const ValuedDigraph& g, const InitialSection& a, bool ascending) {
  PeelState state(g);
  for (std::size_t step = 0; step < a.size(); ++step) {
    std::optional<VertexId> pick;
    for (VertexId v : state.erasable())
      if (a.contains(v) && (!pick || !ascending))
        pick = v;
    assert(pick.has_value());
    state.peel(*pick);
  }
  std::vector<int> theta(g.size());
  for (std::size_t x = 0; x < g.size(); ++x)
    theta[x] = state.theta(static_cast<VertexId>(x));
  return theta;
}

} // namespace
#endif

Subdigraph residual(const ValuedDigraph& g, const InitialSection& a) {
  if (a.members().universe() != g.size() || !is_initial_section(g, a.members()))
    throw NotInitialSection("residual requires an initial section of the digraph");
  const PeelState state(g, a);
  std::vector<int> theta(g.size());
  for (std::size_t x = 0; x < g.size(); ++x)
    theta[x] = state.theta(static_cast<VertexId>(x));
#ifndef NDEBUG
  {
    const auto up = replay_theta(g, a, true);
    const auto down = replay_theta(g, a, false);
    for (std::size_t x = 0; x < g.size(); ++x)
      if (!a.contains(static_cast<VertexId>(x)))
        assert(up[x] == theta[x] && down[x] == theta[x]);
  }
#endif
  return restrict_to(g, a.members(), theta);
}

namespace {

void collect_sequences(PeelState& state, const VertexSet& target, PeelingSequence& prefix,
                       std::vector<PeelingSequence>& out, std::size_t cap) {
  if (prefix.size() == target.size()) {
    if (out.size() >= cap)
      throw CapExceeded("more than " + std::to_string(cap) + " peeling sequences");
    out.push_back(prefix);
    return;
  }
  target.for_each([&](VertexId v) {
    if (!state.is_erasable(v))
      return;
    state.peel(v);
    prefix.push_back(v);
    collect_sequences(state, target, prefix, out, cap);
    prefix.pop_back();
    state.unpeel(v);
  });
}

} // namespace

std::vector<PeelingSequence> peeling_sequences(const ValuedDigraph& g, const InitialSection& a,
                                               std::size_t cap) {
  if (a.members().universe() != g.size() || !is_initial_section(g, a.members()))
    throw NotInitialSection("peeling_sequences requires an initial section of the digraph");
  PeelState state(g);
  PeelingSequence prefix;
  std::vector<PeelingSequence> out;
  collect_sequences(state, a.members(), prefix, out, cap);
  return out;
}

bool is_peeling_sequence(const ValuedDigraph& g, std::span<const VertexId> seq) {
  PeelState state(g);
  for (VertexId v : seq) {
    if (!g.contains(v) || !state.is_erasable(v))
      return false;
    state.peel(v);
  }
  return true;
}

} // namespace peeling
