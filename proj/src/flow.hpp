#pragma once

#include <cstddef>
#include <vector>

namespace digrev::detail {

// Integer-capacity flow network solved by shortest augmenting paths.
// Arcs are scanned in insertion order, so results are deterministic.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adjacency_(nodes) {}

  std::size_t add_arc(std::size_t from, std::size_t to, long capacity);

  long max_flow(std::size_t source, std::size_t sink);

  long flow(std::size_t arc) const { return arcs_[2 * arc].flow; }

  // Nodes reachable from `source` in the residual network.
  std::vector<bool> residual_reachable(std::size_t source) const;

 private:
  struct Half {
    std::size_t to;
    long capacity;
    long flow;
  };

  long residual(std::size_t half) const { return arcs_[half].capacity - arcs_[half].flow; }

  std::vector<Half> arcs_;  // arc i is stored at 2i, its reverse at 2i+1
  std::vector<std::vector<std::size_t>> adjacency_;
};

}  // namespace digrev::detail
