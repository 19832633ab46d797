#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace peeling {

/// Ball of the Cayley graph of a Coxeter group around the identity, found
/// by breadth-first search over right multiplication by generators. The
/// BFS level is the Coxeter length, and x -> x*s is a cover of the right
/// weak order exactly when the level goes up by one. Nothing here relies on
/// inversion sets, so it serves as an independent reference.
template <typename Element>
struct CayleyBall {
  std::vector<Element> elements;
  std::vector<std::size_t> length;
  std::vector<std::pair<std::size_t, std::size_t>> covers; // (lower, upper)
  std::map<Element, std::size_t> index;

  std::size_t count_of_length(std::size_t l) const {
    std::size_t c = 0;
    for (std::size_t x : length)
      c += x == l ? 1 : 0;
    return c;
  }
};

/// `step(x, i)` returns x * s_i for generator index i in [0, num_generators).
template <typename Element, typename Step>
CayleyBall<Element> weak_order_bfs(const Element& identity, std::size_t num_generators, Step step,
                                   std::optional<std::size_t> max_length = std::nullopt) {
  CayleyBall<Element> ball;
  ball.elements.push_back(identity);
  ball.length.push_back(0);
  ball.index.emplace(identity, 0);
  for (std::size_t head = 0; head < ball.elements.size(); ++head) {
    const std::size_t l = ball.length[head];
    for (std::size_t i = 0; i < num_generators; ++i) {
      Element next = step(ball.elements[head], i);
      const auto it = ball.index.find(next);
      if (it == ball.index.end()) {
        if (max_length && l + 1 > *max_length)
          continue;
        const std::size_t id = ball.elements.size();
        ball.index.emplace(next, id);
        ball.elements.push_back(std::move(next));
        ball.length.push_back(l + 1);
        ball.covers.emplace_back(head, id);
      } else if (ball.length[it->second] == l + 1) {
        ball.covers.emplace_back(head, it->second);
      }
    }
  }
  return ball;
}

} // namespace peeling
