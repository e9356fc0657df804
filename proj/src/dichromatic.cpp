#include "digrev/dichromatic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "digrev/errors.hpp"

namespace digrev {

namespace {

std::vector<std::size_t> positions_of(const Digraph& d, std::span<const Vertex> order) {
  if (order.size() != d.num_vertices()) {
    throw InputError("order must list every vertex exactly once");
  }
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> pos(d.num_vertices(), kUnset);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= d.num_vertices() || pos[order[i]] != kUnset) {
      throw InputError("order must list every vertex exactly once");
    }
    pos[order[i]] = i;
  }
  return pos;
}

// Would giving `v` colour `c` close a cycle among vertices already coloured c?
bool closes_cycle(const Digraph& d, const std::vector<int>& color, Vertex v, int c) {
  std::vector<bool> seen(d.num_vertices(), false);
  std::vector<Vertex> todo{v};
  seen[v] = true;
  while (!todo.empty()) {
    const Vertex x = todo.back();
    todo.pop_back();
    for (EdgeId e : d.out_edges(x)) {
      const Vertex y = d.head(e);
      if (y == v) return true;
      if (!seen[y] && color[y] == c) {
        seen[y] = true;
        todo.push_back(y);
      }
    }
  }
  return false;
}

// Depth-first search for a colouring with at most k colours, vertices taken
// in `sequence` order.
class ColoringSearch {
 public:
  ColoringSearch(const Digraph& d, std::vector<Vertex> sequence)
      : d_(d), sequence_(std::move(sequence)) {}

  std::optional<std::vector<int>> run(int k) {
    k_ = k;
    color_.assign(d_.num_vertices(), -1);
    if (assign(0, 0)) return color_;
    return std::nullopt;
  }

 private:
  bool assign(std::size_t i, int used) {
    if (i == sequence_.size()) return true;
    const Vertex v = sequence_[i];
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (closes_cycle(d_, color_, v, c)) continue;
      color_[v] = c;
      if (assign(i + 1, std::max(used, c + 1))) return true;
      color_[v] = -1;
    }
    return false;
  }

  const Digraph& d_;
  std::vector<Vertex> sequence_;
  std::vector<int> color_;
  int k_ = 0;
};

}  // namespace

std::vector<Vertex> identity_order(const Digraph& d) {
  std::vector<Vertex> order(d.num_vertices());
  std::iota(order.begin(), order.end(), Vertex{0});
  return order;
}

bool verify_coloring(const Digraph& d, const Coloring& c) {
  if (c.color.size() != d.num_vertices()) {
    throw InputError("colouring must assign every vertex");
  }
  std::vector<std::size_t> indeg(d.num_vertices(), 0);
  for (const Arc& a : d.arcs()) {
    if (c.color[a.tail] == c.color[a.head]) ++indeg[a.head];
  }
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (EdgeId e : d.out_edges(v)) {
      const Vertex w = d.head(e);
      if (c.color[w] == c.color[v] && --indeg[w] == 0) ready.push_back(w);
    }
  }
  return removed == d.num_vertices();
}

ChiResult chi(const Digraph& d, std::size_t vertex_limit) {
  if (d.num_vertices() > vertex_limit) {
    throw ResourceError("exact dichromatic number refused: " + std::to_string(d.num_vertices()) +
                        " vertices exceed the limit of " + std::to_string(vertex_limit));
  }
  if (d.num_vertices() == 0) return {};
  if (is_acyclic(d)) {
    return {1, Coloring{std::vector<int>(d.num_vertices(), 0), 1}};
  }
  ColoringSearch search(d, identity_order(d));
  for (int k = 2; k <= static_cast<int>(d.num_vertices()); ++k) {
    if (auto color = search.run(k)) {
      return {k, Coloring{std::move(*color), k}};
    }
  }
  throw InternalError("no colouring found with one colour per vertex");
}

std::size_t forward_edge_count(const Digraph& d, std::span<const Vertex> order) {
  const auto pos = positions_of(d, order);
  std::size_t count = 0;
  for (const Arc& a : d.arcs()) {
    if (pos[a.tail] < pos[a.head]) ++count;
  }
  return count;
}

CertificateCheck check_order_certificate(const Digraph& d, const OrderCertificate& cert) {
  if (cert.k < 1) throw InputError("certificate parameter k must be at least 1");
  const auto pos = positions_of(d, cert.order);
  const std::size_t n = d.num_vertices();
  const long forward_weight = cert.k - 1;
  auto weight = [&](const Arc& a) { return pos[a.tail] < pos[a.head] ? forward_weight : -1L; };

  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<long> dist(n, 0);
  std::vector<std::uint32_t> pred(n, kNone);
  for (std::size_t pass = 0; pass <= n; ++pass) {
    bool changed = false;
    for (std::uint32_t i = 0; i < d.num_edges(); ++i) {
      const Arc a = d.arcs()[i];
      const long candidate = dist[a.tail] + weight(a);
      if (candidate >= dist[a.head]) continue;
      dist[a.head] = candidate;
      pred[a.head] = i;
      changed = true;
      if (pass < n) continue;

      // Still relaxing after n passes: the predecessor graph has a cycle,
      // and every cycle in it is negative.
      Vertex x = a.head;
      for (std::size_t step = 0; step < n; ++step) {
        if (pred[x] == kNone) throw InternalError("predecessor chain broken");
        x = d.arcs()[pred[x]].tail;
      }
      std::vector<EdgeId> edges;
      Vertex y = x;
      do {
        edges.push_back(EdgeId{pred[y]});
        y = d.arcs()[pred[y]].tail;
      } while (y != x);
      std::reverse(edges.begin(), edges.end());
      long total = 0;
      for (EdgeId e : edges) total += weight(d.arc(e));
      if (total >= 0 || !is_directed_cycle(d, edges)) {
        throw InternalError("extracted predecessor cycle is not a negative simple cycle");
      }
      return {false, DirectedCycle{std::move(edges)}};
    }
    if (!changed) break;
  }
  return {true, std::nullopt};
}

std::optional<OrderCertificate> find_order_certificate(const Digraph& d, int k,
                                                       std::size_t vertex_limit) {
  if (k < 1) throw InputError("certificate parameter k must be at least 1");
  if (d.num_vertices() > vertex_limit) {
    throw ResourceError("certificate search refused: " + std::to_string(d.num_vertices()) +
                        " vertices exceed the limit of " + std::to_string(vertex_limit));
  }
  OrderCertificate cert{identity_order(d), k};
  do {
    if (check_order_certificate(d, cert).ok) return cert;
  } while (std::next_permutation(cert.order.begin(), cert.order.end()));
  return std::nullopt;
}

Coloring coloring_from_certificate(const Digraph& d, const OrderCertificate& cert) {
  if (!check_order_certificate(d, {cert.order, 2}).ok) {
    throw PreconditionError("order does not certify a dichromatic number of at most 2");
  }
  Coloring result{std::vector<int>(d.num_vertices(), -1), 0};
  bool stuck = false;
  for (Vertex v : cert.order) {
    if (!closes_cycle(d, result.color, v, 0)) {
      result.color[v] = 0;
    } else if (!closes_cycle(d, result.color, v, 1)) {
      result.color[v] = 1;
    } else {
      stuck = true;
      break;
    }
  }
  if (stuck) {
    auto exact = ColoringSearch(d, cert.order).run(2);
    if (!exact) throw InternalError("passing certificate but no two-colouring exists");
    result.color = std::move(*exact);
  }
  for (int c : result.color) result.num_colors = std::max(result.num_colors, c + 1);
  if (!verify_coloring(d, result)) {
    throw InternalError("colouring built from certificate has a monochromatic cycle");
  }
  return result;
}

ReduceResult charbit_reduce(const Digraph& d, std::span<const Vertex> order) {
  const std::vector<Vertex> ord(order.begin(), order.end());
  ReduceResult result;
  result.final = d;
  result.forward_counts.push_back(forward_edge_count(d, ord));
  while (true) {
    auto check = check_order_certificate(result.final, {ord, 2});
    if (check.ok) break;
    if (result.sequence.size() >= d.num_edges()) {
      throw InternalError("reduction exceeded one reversal per edge");
    }
    result.final = result.final.reversed(check.violating->edges);
    result.sequence.cycles.push_back(std::move(*check.violating));
    const std::size_t forward = forward_edge_count(result.final, ord);
    if (forward <= result.forward_counts.back()) {
      throw InternalError("reversal did not increase the number of forward edges");
    }
    result.forward_counts.push_back(forward);
  }
  result.coloring = coloring_from_certificate(result.final, {ord, 2});
  return result;
}

}  // namespace digrev
