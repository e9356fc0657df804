#include "digrev/connectivity.hpp"

#include <algorithm>

#include "digrev/errors.hpp"
#include "flow.hpp"

namespace digrev {

namespace {

void check_pair(const Digraph& d, Vertex u, Vertex v) {
  if (u >= d.num_vertices() || v >= d.num_vertices()) {
    throw InputError("vertex index out of range");
  }
  if (u == v) throw InputError("source and target must differ");
}

detail::FlowNetwork unit_network(const Digraph& d) {
  detail::FlowNetwork net(d.num_vertices());
  for (const Arc& a : d.arcs()) net.add_arc(a.tail, a.head, 1);
  return net;
}

// Vertices reachable from u in d without using an edge of `blocked`.
std::vector<bool> reachable_avoiding(const Digraph& d, Vertex u, const std::vector<bool>& blocked) {
  std::vector<bool> seen(d.num_vertices(), false);
  std::vector<Vertex> todo{u};
  seen[u] = true;
  while (!todo.empty()) {
    const Vertex x = todo.back();
    todo.pop_back();
    for (EdgeId e : d.out_edges(x)) {
      if (blocked[e.value]) continue;
      const Vertex y = d.head(e);
      if (!seen[y]) {
        seen[y] = true;
        todo.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

std::size_t lambda(const Digraph& d, Vertex u, Vertex v) {
  check_pair(d, u, v);
  auto net = unit_network(d);
  return static_cast<std::size_t>(net.max_flow(u, v));
}

PathSystem menger_system(const Digraph& d, Vertex u, Vertex v) {
  check_pair(d, u, v);
  auto net = unit_network(d);
  const long value = net.max_flow(u, v);

  std::vector<bool> available(d.num_edges(), false);
  for (std::uint32_t i = 0; i < d.num_edges(); ++i) available[i] = net.flow(i) > 0;

  PathSystem ps{u, v, {}, std::nullopt};
  std::vector<long> position(d.num_vertices(), -1);
  for (long round = 0; round < value; ++round) {
    std::vector<EdgeId> walk;
    std::vector<Vertex> visited{u};
    position[u] = 0;
    Vertex at = u;
    while (at != v) {
      std::optional<EdgeId> step;
      for (EdgeId e : d.out_edges(at)) {
        if (available[e.value]) {
          step = e;
          break;
        }
      }
      if (!step) throw InternalError("flow decomposition ran out of edges");
      available[step->value] = false;
      walk.push_back(*step);
      at = d.head(*step);
      if (position[at] >= 0) {
        // Closed detour: drop it, keep walking from the earlier visit.
        const auto keep = static_cast<std::size_t>(position[at]);
        for (std::size_t i = keep + 1; i < visited.size(); ++i) position[visited[i]] = -1;
        visited.resize(keep + 1);
        walk.resize(keep);
      } else {
        position[at] = static_cast<long>(visited.size());
        visited.push_back(at);
      }
    }
    for (Vertex x : visited) position[x] = -1;
    ps.paths.push_back({u, v, std::move(walk)});
  }

  std::vector<bool> blocked(d.num_edges(), false);
  const std::vector<bool> residual = net.residual_reachable(u);
  for (std::uint32_t i = 0; i < d.num_edges(); ++i) {
    const Arc a = d.arcs()[i];
    blocked[i] = residual[a.tail] && !residual[a.head];
  }
  const auto side = reachable_avoiding(d, u, blocked);
  std::vector<Vertex> w;
  for (Vertex x = 0; x < d.num_vertices(); ++x) {
    if (side[x]) w.push_back(x);
  }
  ps.cut = out_edges(d, w);

  if (auto problems = path_system_violations(d, ps); !problems.empty()) {
    throw InternalError("path system is not orthogonal: " + problems.front());
  }
  return ps;
}

std::vector<std::string> path_system_violations(const Digraph& d, const PathSystem& ps) {
  std::vector<std::string> problems;
  std::vector<bool> used(d.num_edges(), false);
  for (std::size_t i = 0; i < ps.paths.size(); ++i) {
    const auto& p = ps.paths[i];
    if (p.source != ps.source || p.target != ps.target || !is_directed_path(d, p)) {
      problems.push_back("path " + std::to_string(i) + " is not a source-target path");
      continue;
    }
    for (EdgeId e : p.edges) {
      if (used[e.value]) problems.push_back("edge " + std::to_string(e.value) + " used twice");
      used[e.value] = true;
    }
  }
  if (!ps.cut) return problems;

  const Cut& cut = *ps.cut;
  const Cut expected = out_edges(d, cut.side);
  if (expected.out_edges != normalized(cut.out_edges)) {
    problems.push_back("cut edges differ from out(W)");
  }
  const bool has_source = std::binary_search(cut.side.begin(), cut.side.end(), ps.source);
  const bool has_target = std::binary_search(cut.side.begin(), cut.side.end(), ps.target);
  if (!has_source || has_target) problems.push_back("cut side must contain source but not target");

  std::vector<bool> in_cut(d.num_edges(), false);
  for (EdgeId e : cut.out_edges) in_cut[e.value] = true;
  if (reachable_avoiding(d, ps.source, in_cut)[ps.target]) {
    problems.push_back("a source-target path avoids the cut");
  }
  for (std::size_t i = 0; i < ps.paths.size(); ++i) {
    const auto hits = std::count_if(ps.paths[i].edges.begin(), ps.paths[i].edges.end(),
                                    [&](EdgeId e) { return in_cut[e.value]; });
    if (hits != 1) {
      problems.push_back("path " + std::to_string(i) + " meets the cut " + std::to_string(hits) +
                         " times");
    }
  }
  if (cut.out_edges.size() != ps.paths.size()) {
    problems.push_back("cut size " + std::to_string(cut.out_edges.size()) +
                       " differs from path count " + std::to_string(ps.paths.size()));
  }
  return problems;
}

Digraph reverse_edge_set(const Digraph& d, std::span<const EdgeId> edges) {
  return d.reversed(edges);
}

FlipSeparation flip_separation(const Digraph& d, Vertex u, Vertex v) {
  PathSystem ps = menger_system(d, u, v);
  EdgeSet all;
  for (const auto& p : ps.paths) all.insert(all.end(), p.edges.begin(), p.edges.end());
  all = normalized(std::move(all));

  FlipSeparation result{reverse_edge_set(d, all), std::move(ps), {}, {}, {}};
  result.side = result.system.cut->side;
  result.reversed_cut = result.system.cut->out_edges;
  result.in_edges_after = in_edges(result.flipped, result.side);

  if (!out_edges(result.flipped, result.side).out_edges.empty()) {
    throw InternalError("flipped digraph still has edges leaving the source side");
  }
  if (reachable_vertex(result.flipped, u, v)) {
    throw InternalError("flipping the path system left a source-target path");
  }
  return result;
}

}  // namespace digrev
