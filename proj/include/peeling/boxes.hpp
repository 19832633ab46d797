#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "peeling/digraph.hpp"

namespace peeling {

/// Cell (a,b) of a diagram. Every family in this library indexes its
/// vertices by such integer pairs.
struct Box {
  long a = 0;
  long b = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

std::string to_string(const Box& box);
/// Accepts "(a,b)" or "a,b". Throws InvalidArgument.
Box parse_box(const std::string& text);

/// A valued digraph whose vertices are boxes, with the box <-> id mapping.
class BoxDigraph {
public:
  using Hook = std::function<std::vector<Box>(const Box&)>;
  using Valuation = std::function<long(const Box&)>;

  BoxDigraph() = default;
  /// Vertex ids follow the order of `boxes`. Every hook target must be one
  /// of `boxes`; duplicates and the box itself are dropped.
  BoxDigraph(std::vector<Box> boxes, const Hook& hook, const Valuation& theta);

  const ValuedDigraph& graph() const { return g_; }
  const std::vector<Box>& boxes() const { return boxes_; }
  std::size_t size() const { return boxes_.size(); }

  bool contains(const Box& box) const { return index_.count(box) != 0; }
  std::optional<VertexId> find(const Box& box) const;
  /// Throws UnknownVertex.
  VertexId id(const Box& box) const;
  const Box& box(VertexId v) const { return boxes_[v]; }

  /// Throws UnknownVertex for boxes outside the diagram.
  VertexSet to_set(std::span<const Box> boxes) const;
  std::vector<Box> to_boxes(const VertexSet& s) const;

private:
  std::vector<Box> boxes_;
  std::map<Box, VertexId> index_;
  ValuedDigraph g_;
};

} // namespace peeling
