#pragma once

// Small fixtures and brute-force oracles for the unit tests. Oracles are
// deliberately naive and share no code with the library beyond the Digraph
// accessors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "digrev/graph.hpp"
#include "digrev/reversion.hpp"

namespace fixtures {

using digrev::Digraph;

inline Digraph make(std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> edges) {
  return Digraph::from_edges(std::move(labels), edges);
}

inline Digraph triangle() { return make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }
inline Digraph path_abc() { return make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
inline Digraph two_cycle() { return make({"u", "v"}, {{"u", "v"}, {"v", "u"}}); }
// Biorientation of K3; ids 0 u>v, 1 v>u, 2 v>w, 3 w>v, 4 u>w, 5 w>u.
inline Digraph bik3() {
  return make({"u", "v", "w"}, {{"u", "v"}, {"v", "u"}, {"v", "w"}, {"w", "v"}, {"u", "w"}, {"w", "u"}});
}
// u>v twice and v>u once.
inline Digraph double_uv() { return make({"u", "v"}, {{"u", "v"}, {"u", "v"}, {"v", "u"}}); }
// Directed triangle u>v>w>u with every arc doubled.
inline Digraph doubled_triangle() {
  return make({"u", "v", "w"}, {{"u", "v"}, {"u", "v"}, {"v", "w"}, {"v", "w"}, {"w", "u"}, {"w", "u"}});
}

inline std::vector<digrev::EdgeId> ids(std::initializer_list<std::uint32_t> xs) {
  std::vector<digrev::EdgeId> out;
  for (auto x : xs) out.push_back(digrev::EdgeId{x});
  return out;
}

}  // namespace fixtures

namespace oracle {

using digrev::Digraph;
using Matrix = std::vector<std::vector<bool>>;

// Reflexive-transitive closure by repeated boolean matrix squaring.
inline Matrix closure(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  Matrix r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (const auto& a : d.arcs()) r[a.tail][a.head] = true;
  for (std::size_t len = 1; len < n; len *= 2) {
    Matrix next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (r[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (r[k][j]) next[i][j] = true;
    r = std::move(next);
  }
  return r;
}

// Simple cycles as edge lists, found by extending simple paths from every
// start edge and keeping each cycle once (rotated to its minimum edge id).
inline std::set<std::vector<std::uint32_t>> cycles(const Digraph& d) {
  std::set<std::vector<std::uint32_t>> out;
  const auto& arcs = d.arcs();
  std::vector<std::uint32_t> path;
  std::vector<bool> on(d.num_vertices(), false);
  std::function<void(std::uint32_t, std::uint32_t)> extend = [&](std::uint32_t start, std::uint32_t at) {
    for (std::uint32_t e = 0; e < arcs.size(); ++e) {
      if (arcs[e].tail != at) continue;
      if (arcs[e].head == start) {
        auto c = path;
        c.push_back(e);
        std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
        out.insert(c);
      } else if (!on[arcs[e].head]) {
        on[arcs[e].head] = true;
        path.push_back(e);
        extend(start, arcs[e].head);
        path.pop_back();
        on[arcs[e].head] = false;
      }
    }
  };
  for (std::uint32_t s = 0; s < d.num_vertices(); ++s) {
    on[s] = true;
    extend(s, s);
    on[s] = false;
  }
  return out;
}

inline bool class_acyclic(const Digraph& d, const std::vector<int>& color, int c) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& a : d.arcs()) {
    if (color[a.tail] == c && color[a.head] == c) edges.emplace_back(d.label(a.tail), d.label(a.head));
  }
  const Matrix r = closure(Digraph::from_edges(d.labels(), edges));
  for (const auto& [t, h] : edges) {
    if (r[d.vertex(h)][d.vertex(t)]) return false;
  }
  return true;
}

// Smallest k for which some k-colouring has only acyclic classes.
inline int chi(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  for (int k = 0;; ++k) {
    std::vector<int> color(n, 0);
    if (n == 0) return 0;
    if (k == 0) continue;
    while (true) {
      bool ok = true;
      for (int c = 0; c < k && ok; ++c) ok = class_acyclic(d, color, c);
      if (ok) return k;
      std::size_t i = 0;
      while (i < n && ++color[i] == k) color[i++] = 0;
      if (i == n) break;
    }
  }
}

// Simple u->v paths as edge lists.
inline std::vector<std::vector<std::uint32_t>> paths(const Digraph& d, digrev::Vertex u, digrev::Vertex v) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> path;
  std::vector<bool> on(d.num_vertices(), false);
  std::function<void(digrev::Vertex)> walk = [&](digrev::Vertex at) {
    if (at == v) {
      out.push_back(path);
      return;
    }
    for (std::uint32_t e = 0; e < d.num_edges(); ++e) {
      const auto a = d.arcs()[e];
      if (a.tail != at || on[a.head]) continue;
      on[a.head] = true;
      path.push_back(e);
      walk(a.head);
      path.pop_back();
      on[a.head] = false;
    }
  };
  on[u] = true;
  walk(u);
  return out;
}

// Largest family of pairwise edge-disjoint simple u->v paths.
inline std::size_t lambda(const Digraph& d, digrev::Vertex u, digrev::Vertex v) {
  const auto all = paths(d, u, v);
  std::vector<bool> used(d.num_edges(), false);
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t count) {
    best = std::max(best, count);
    for (std::size_t i = from; i < all.size(); ++i) {
      if (std::any_of(all[i].begin(), all[i].end(), [&](auto e) { return used[e]; })) continue;
      for (auto e : all[i]) used[e] = true;
      pick(i + 1, count + 1);
      for (auto e : all[i]) used[e] = false;
    }
  };
  pick(0, 0);
  return best;
}

// Minimum |out(W)| over vertex sets W with u in W and v outside.
inline std::size_t min_cut(const Digraph& d, digrev::Vertex u, digrev::Vertex v) {
  std::size_t best = d.num_edges();
  for (std::uint32_t w = 0; w < (1U << d.num_vertices()); ++w) {
    if (!((w >> u) & 1U) || ((w >> v) & 1U)) continue;
    std::size_t out = 0;
    for (const auto& a : d.arcs()) out += ((w >> a.tail) & 1U) && !((w >> a.head) & 1U);
    best = std::min(best, out);
  }
  return best;
}

// Orientation masks reachable from `start` by single simple-cycle reversals.
inline std::set<std::uint32_t> orientation_class(const Digraph& d, std::uint32_t start) {
  auto orient = [&](std::uint32_t mask) {
    std::vector<digrev::Arc> arcs(d.arcs().begin(), d.arcs().end());
    for (std::size_t i = 0; i < arcs.size(); ++i)
      if ((mask >> i) & 1U) arcs[i] = arcs[i].reversed();
    return Digraph(d.labels(), arcs);
  };
  std::set<std::uint32_t> seen{start};
  std::vector<std::uint32_t> stack{start};
  while (!stack.empty()) {
    const auto mask = stack.back();
    stack.pop_back();
    for (const auto& c : cycles(orient(mask))) {
      auto next = mask;
      for (auto e : c) next ^= 1U << e;
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return seen;
}

// Underlying multigraph stays connected after deleting any single vertex.
inline bool two_vertex_connected(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  if (n < 3) return false;
  for (std::size_t gone = 0; gone < n; ++gone) {
    std::vector<bool> seen(n, false);
    const std::size_t start = gone == 0 ? 1 : 0;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (const auto& a : d.arcs()) {
        for (auto [p, q] : {std::pair{a.tail, a.head}, std::pair{a.head, a.tail}}) {
          if (p == x && q != gone && !seen[q]) {
            seen[q] = true;
            stack.push_back(q);
          }
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x)
      if (x != gone && !seen[x]) return false;
  }
  return true;
}

}  // namespace oracle
