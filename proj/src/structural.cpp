#include "digrev/structural.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "digrev/errors.hpp"
#include "flow.hpp"

namespace digrev {

namespace {

// Marks the edges of `edges` in `used`; throws if one is already marked.
void claim_edges(std::vector<bool>& used, std::span<const EdgeId> edges, const std::string& what) {
  for (EdgeId e : edges) {
    if (used[e.value]) {
      throw InputError(what + " shares edge " + std::to_string(e.value) + " with another path");
    }
    used[e.value] = true;
  }
}

std::vector<EdgeId> joined(const DirectedPath& a, const DirectedPath& b) {
  std::vector<EdgeId> all(a.edges);
  all.insert(all.end(), b.edges.begin(), b.edges.end());
  return all;
}

}  // namespace

StagedFlip flip_path_staged(const Digraph& d, const DirectedPath& p,
                            const std::vector<DirectedPath>& qs) {
  if (qs.empty()) throw InputError("at least one return path is required");
  if (!is_directed_path(d, p)) throw InputError("target path is not a directed path");
  std::vector<bool> used(d.num_edges(), false);
  claim_edges(used, p.edges, "target path");
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const auto& q = qs[i];
    if (!is_directed_path(d, q) || q.source != p.target || q.target != p.source) {
      throw InputError("return path " + std::to_string(i) +
                       " is not a directed path from the target back to the source");
    }
    claim_edges(used, q.edges, "return path " + std::to_string(i));
  }

  StagedFlip flip{p, qs, {}, {}, {}};
  Digraph current = d;
  for (std::size_t stage = 0; stage < qs.size(); ++stage) {
    // Both halves run in opposite directions between the same endpoints in
    // `current`, so their union is balanced.
    const auto edges = stage == 0 ? joined(p, qs[0]) : joined(qs[stage - 1], qs[stage]);
    ReversionSequence part{cycle_decompose(current, edges)};
    current = apply(current, part);
    for (auto& c : part.cycles) flip.sequence.cycles.push_back(std::move(c));
    flip.stage_ends.push_back(flip.sequence.size());
  }
  flip.touch_counts = touch_counts(d, flip.sequence);
  return flip;
}

ReversionSequence flip_path_system_staged(const Digraph& d, const PathSystem& ps,
                                          const std::vector<std::vector<DirectedPath>>& returns_per_path,
                                          std::span<const EdgeId> forbidden) {
  if (returns_per_path.size() != ps.paths.size()) {
    throw InputError("need one return chain per path");
  }
  std::vector<bool> banned(d.num_edges(), false);
  for (EdgeId e : forbidden) {
    d.arc(e);
    banned[e.value] = true;
  }
  auto avoid = [&](const DirectedPath& path, const std::string& what) {
    for (EdgeId e : path.edges) {
      if (e.value < banned.size() && banned[e.value]) {
        throw InputError(what + " uses forbidden edge " + std::to_string(e.value));
      }
    }
  };
  std::vector<bool> used(d.num_edges(), false);
  for (std::size_t i = 0; i < ps.paths.size(); ++i) {
    const auto& p = ps.paths[i];
    if (p.source != ps.source || p.target != ps.target || !is_directed_path(d, p)) {
      throw InputError("path " + std::to_string(i) + " does not run from source to target");
    }
    avoid(p, "path " + std::to_string(i));
    claim_edges(used, p.edges, "path " + std::to_string(i));
    for (std::size_t j = 0; j < returns_per_path[i].size(); ++j) {
      const auto& q = returns_per_path[i][j];
      const std::string name = "return path " + std::to_string(j) + " of path " + std::to_string(i);
      if (!is_directed_path(d, q)) throw InputError(name + " is not a directed path");
      avoid(q, name);
      claim_edges(used, q.edges, name);
    }
  }

  ReversionSequence seq;
  Digraph current = d;
  for (std::size_t i = 0; i < ps.paths.size(); ++i) {
    // Earlier stages only touched edges disjoint from this chain, so the
    // chain still has its original orientation in `current`.
    StagedFlip flip = flip_path_staged(current, ps.paths[i], returns_per_path[i]);
    current = apply(current, flip.sequence);
    for (auto& c : flip.sequence.cycles) seq.cycles.push_back(std::move(c));
  }
  return seq;
}

bool is_tournament(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  std::vector<std::uint8_t> seen(n * n, 0);
  for (const Arc& a : d.arcs()) {
    const std::size_t lo = std::min(a.tail, a.head), hi = std::max(a.tail, a.head);
    if (seen[lo * n + hi]++) return false;
  }
  return d.num_edges() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

TwoChainResult tournament_two_chain(const Digraph& t) {
  if (!is_tournament(t)) throw InputError("input is not a tournament");
  const std::size_t n = t.num_vertices();

  std::vector<std::size_t> outdegree(n);
  for (Vertex v = 0; v < n; ++v) outdegree[v] = t.out_edges(v).size();
  TwoChainResult result;
  result.order.resize(n);
  std::iota(result.order.begin(), result.order.end(), Vertex{0});
  std::stable_sort(result.order.begin(), result.order.end(),
                   [&](Vertex a, Vertex b) { return outdegree[a] > outdegree[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[result.order[i]] = i;

  // Forced edges: backward edges inside a parity class.
  EdgeSet reversed;
  std::vector<long> excess(n, 0);  // out - in over the forced edges
  for (std::uint32_t i = 0; i < t.num_edges(); ++i) {
    const Arc a = t.arcs()[i];
    if (rank[a.tail] % 2 == rank[a.head] % 2 && rank[a.tail] > rank[a.head]) {
      reversed.push_back(EdgeId{i});
      ++excess[a.tail];
      --excess[a.head];
    }
  }

  // Select cross edges S with out_S(v) - in_S(v) = -excess(v) for every v.
  const std::size_t source = n, sink = n + 1;
  detail::FlowNetwork net(n + 2);
  std::vector<std::pair<std::size_t, EdgeId>> cross;
  for (std::uint32_t i = 0; i < t.num_edges(); ++i) {
    const Arc a = t.arcs()[i];
    if (rank[a.tail] % 2 != rank[a.head] % 2) {
      cross.emplace_back(net.add_arc(a.tail, a.head, 1), EdgeId{i});
    }
  }
  long demand = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (excess[v] < 0) {
      net.add_arc(source, v, -excess[v]);
      demand -= excess[v];
    } else if (excess[v] > 0) {
      net.add_arc(v, sink, excess[v]);
    }
  }
  if (net.max_flow(source, sink) != demand) {
    throw InternalError("no balancing set of cross edges exists");
  }
  for (const auto& [arc, e] : cross) {
    if (net.flow(arc) > 0) reversed.push_back(e);
  }

  const Digraph target = t.reversed(reversed);
  auto seq = reachable(t, target);
  if (!seq) throw InternalError("balanced reversal set was judged unreachable");
  result.sequence = std::move(*seq);
  result.final = apply(t, result.sequence);
  for (const Arc& a : result.final.arcs()) {
    if (rank[a.tail] % 2 == rank[a.head] % 2 && rank[a.tail] > rank[a.head]) {
      throw InternalError("two-chain result has a backward edge inside a parity class");
    }
  }
  return result;
}

Digraph orientation_from_mask(const Digraph& d, std::uint64_t mask) {
  std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if ((mask >> i) & 1U) arcs[i] = arcs[i].reversed();
  }
  return d.reoriented(std::move(arcs));
}

OrientationClasses orientation_space_oracle(const Digraph& d, std::size_t max_edges) {
  if (d.num_edges() > max_edges || d.num_edges() > 24) {
    throw ResourceError("orientation space search refused: " + std::to_string(d.num_edges()) +
                        " edges exceed the limit of " + std::to_string(max_edges));
  }
  const std::uint32_t states = std::uint32_t{1} << d.num_edges();
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  OrientationClasses out;
  out.num_edges = d.num_edges();
  out.class_of.assign(states, kUnset);

  std::deque<std::uint32_t> frontier;
  for (std::uint32_t start = 0; start < states; ++start) {
    if (out.class_of[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(out.classes.size());
    out.classes.emplace_back();
    out.class_of[start] = id;
    frontier.push_back(start);
    while (!frontier.empty()) {
      const std::uint32_t mask = frontier.front();
      frontier.pop_front();
      out.classes[id].push_back(mask);
      for (const auto& c : simple_cycles(orientation_from_mask(d, mask))) {
        std::uint32_t next = mask;
        for (EdgeId e : c.edges) next ^= std::uint32_t{1} << e.value;
        if (out.class_of[next] == kUnset) {
          out.class_of[next] = id;
          frontier.push_back(next);
        }
      }
    }
    std::sort(out.classes[id].begin(), out.classes[id].end());
  }
  return out;
}

}  // namespace digrev
