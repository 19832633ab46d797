#include "peeling/boxes.hpp"

#include <regex>
#include <set>
#include <stdexcept>

namespace peeling {

std::string to_string(const Box& box) {
  return "(" + std::to_string(box.a) + "," + std::to_string(box.b) + ")";
}

Box parse_box(const std::string& text) {
  static const std::regex pattern(R"(\s*\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    throw InvalidArgument("cannot parse box '" + text + "'");
  return Box{std::stol(m[1]), std::stol(m[2])};
}

BoxDigraph::BoxDigraph(std::vector<Box> boxes, const Hook& hook, const Valuation& theta)
    : boxes_(std::move(boxes)) {
  for (std::size_t i = 0; i < boxes_.size(); ++i)
    if (!index_.emplace(boxes_[i], static_cast<VertexId>(i)).second)
      throw std::logic_error("duplicate box " + to_string(boxes_[i]));
  DigraphDescription d;
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    const Box& c = boxes_[i];
    d.theta.push_back(theta(c));
    d.labels.push_back(to_string(c));
    std::set<Box> targets;
    for (const Box& t : hook(c))
      if (t != c)
        targets.insert(t);
    for (const Box& t : targets) {
      const auto it = index_.find(t);
      if (it == index_.end())
        throw std::logic_error("hook of " + to_string(c) + " leaves the diagram at " +
                               to_string(t));
      d.arcs.emplace_back(static_cast<VertexId>(i), it->second);
    }
  }
  g_ = ValuedDigraph(d);
}

std::optional<VertexId> BoxDigraph::find(const Box& box) const {
  const auto it = index_.find(box);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

VertexId BoxDigraph::id(const Box& box) const {
  const auto it = index_.find(box);
  if (it == index_.end())
    throw UnknownVertex("box " + to_string(box) + " is not in the diagram");
  return it->second;
}

VertexSet BoxDigraph::to_set(std::span<const Box> boxes) const {
  VertexSet s(size());
  for (const Box& b : boxes)
    s.insert(id(b));
  return s;
}

std::vector<Box> BoxDigraph::to_boxes(const VertexSet& s) const {
  std::vector<Box> out;
  s.for_each([&](VertexId v) { out.push_back(boxes_[v]); });
  return out;
}

} // namespace peeling
