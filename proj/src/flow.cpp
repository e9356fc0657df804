#include "flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace digrev::detail {

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, long capacity) {
  const std::size_t id = arcs_.size() / 2;
  arcs_.push_back({to, capacity, 0});
  arcs_.push_back({from, 0, 0});
  adjacency_[from].push_back(2 * id);
  adjacency_[to].push_back(2 * id + 1);
  return id;
}

long FlowNetwork::max_flow(std::size_t source, std::size_t sink) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  long total = 0;
  if (source == sink) return 0;
  while (true) {
    std::vector<std::size_t> via(adjacency_.size(), kNone);
    std::vector<bool> seen(adjacency_.size(), false);
    std::queue<std::size_t> todo;
    todo.push(source);
    seen[source] = true;
    while (!todo.empty() && !seen[sink]) {
      const std::size_t x = todo.front();
      todo.pop();
      for (std::size_t half : adjacency_[x]) {
        const std::size_t y = arcs_[half].to;
        if (seen[y] || residual(half) <= 0) continue;
        seen[y] = true;
        via[y] = half;
        todo.push(y);
      }
    }
    if (!seen[sink]) return total;
    long push = std::numeric_limits<long>::max();
    for (std::size_t y = sink; y != source; y = arcs_[via[y] ^ 1].to) {
      push = std::min(push, residual(via[y]));
    }
    for (std::size_t y = sink; y != source; y = arcs_[via[y] ^ 1].to) {
      arcs_[via[y]].flow += push;
      arcs_[via[y] ^ 1].flow -= push;
    }
    total += push;
  }
}

std::vector<bool> FlowNetwork::residual_reachable(std::size_t source) const {
  std::vector<bool> seen(adjacency_.size(), false);
  std::vector<std::size_t> todo{source};
  seen[source] = true;
  while (!todo.empty()) {
    const std::size_t x = todo.back();
    todo.pop_back();
    for (std::size_t half : adjacency_[x]) {
      const std::size_t y = arcs_[half].to;
      if (!seen[y] && residual(half) > 0) {
        seen[y] = true;
        todo.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace digrev::detail
