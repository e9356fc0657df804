#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "digrev/graph.hpp"
#include "digrev/reversion.hpp"

namespace digrev {

/// Vertex colouring; `color[v]` is in [0, num_colors).
struct Coloring {
  std::vector<int> color;
  int num_colors = 0;
};

/// Linear order (first to last) together with the parameter k.
struct OrderCertificate {
  std::vector<Vertex> order;
  int k = 1;
};

struct CertificateCheck {
  bool ok = true;
  /// A simple cycle with fewer than |C|/k forward edges, when !ok.
  std::optional<DirectedCycle> violating;
};

struct ChiResult {
  int chi = 0;
  Coloring coloring;
};

struct ReduceResult {
  ReversionSequence sequence;
  Digraph final;
  Coloring coloring;
  /// Forward-edge count of the base and after every reversal.
  std::vector<std::size_t> forward_counts;
};

inline constexpr std::size_t kDefaultChiVertexLimit = 20;
inline constexpr std::size_t kDefaultCertificateVertexLimit = 9;

/// True iff every colour class induces an acyclic subdigraph. Throws
/// InputError when the assignment does not cover every vertex.
bool verify_coloring(const Digraph& d, const Coloring& c);

/// Exact dichromatic number with a witnessing colouring.
///
/// Tries k = 1, 2, ... and runs a depth-first search over colour
/// assignments in vertex order, rejecting a choice as soon as it closes a
/// monochromatic cycle. A vertex may only open the next unused colour, so
/// permuted colourings are never revisited. The first colouring found is
/// returned, which makes the witness deterministic.
ChiResult chi(const Digraph& d, std::size_t vertex_limit = kDefaultChiVertexLimit);

/// Number of edges whose tail precedes its head in `order`.
std::size_t forward_edge_count(const Digraph& d, std::span<const Vertex> order);

/// Checks that every directed cycle has at least |C|/k forward edges.
///
/// Equivalent to the absence of a negative cycle when forward edges weigh
/// k-1 and backward edges -1; detected by Bellman-Ford relaxation from a
/// virtual source over all parallel edges in EdgeId order.
CertificateCheck check_order_certificate(const Digraph& d, const OrderCertificate& cert);

/// Lexicographically first passing order over vertex permutations, or
/// nullopt when none exists.
std::optional<OrderCertificate> find_order_certificate(
    const Digraph& d, int k, std::size_t vertex_limit = kDefaultCertificateVertexLimit);

/// Colouring with at most two colours from a passing k = 2 certificate.
/// Vertices are coloured greedily along the order, preferring colour 0.
/// If greedy gets stuck, an exact two-colouring search is used instead.
Coloring coloring_from_certificate(const Digraph& d, const OrderCertificate& cert);

/// Repeatedly reverses a cycle with more backward than forward edges
/// relative to `order` until none is left. Each reversal strictly increases
/// the forward-edge count, so at most |E| reversals happen.
ReduceResult charbit_reduce(const Digraph& d, std::span<const Vertex> order);

/// Label-order helper: the order in which the vertices were declared.
std::vector<Vertex> identity_order(const Digraph& d);

}  // namespace digrev
