#include "digrev/reversion.hpp"

#include <algorithm>
#include <string>

#include "digrev/errors.hpp"

namespace digrev {

namespace {

void check_edges_exist(const Digraph& d, std::span<const EdgeId> edges) {
  for (EdgeId e : edges) d.arc(e);
}

DirectedCycle rotated_to_min(std::vector<EdgeId> edges) {
  auto smallest = std::min_element(edges.begin(), edges.end());
  std::rotate(edges.begin(), smallest, edges.end());
  return {std::move(edges)};
}

}  // namespace

std::optional<std::size_t> validate(const Digraph& d, const ReversionSequence& seq) {
  std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
  for (std::size_t i = 0; i < seq.cycles.size(); ++i) {
    const auto& edges = seq.cycles[i].edges;
    if (!is_directed_cycle(arcs, edges)) return i;
    for (EdgeId e : edges) arcs[e.value] = arcs[e.value].reversed();
  }
  return std::nullopt;
}

Digraph apply(const Digraph& d, const ReversionSequence& seq) {
  std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
  for (std::size_t i = 0; i < seq.cycles.size(); ++i) {
    const auto& edges = seq.cycles[i].edges;
    if (!is_directed_cycle(arcs, edges)) {
      throw ValidationError("cycle " + std::to_string(i) +
                                " is not a directed cycle of the intermediate orientation",
                            i);
    }
    for (EdgeId e : edges) arcs[e.value] = arcs[e.value].reversed();
  }
  return d.reoriented(std::move(arcs));
}

std::vector<std::uint32_t> touch_counts(const Digraph& d, const ReversionSequence& seq) {
  std::vector<std::uint32_t> counts(d.num_edges(), 0);
  for (const auto& c : seq.cycles) {
    check_edges_exist(d, c.edges);
    for (EdgeId e : c.edges) ++counts[e.value];
  }
  return counts;
}

EdgeSet touched_edges(const ReversionSequence& seq) {
  EdgeSet all;
  for (const auto& c : seq.cycles) all.insert(all.end(), c.edges.begin(), c.edges.end());
  return normalized(std::move(all));
}

Difference difference(const Digraph& d, const ReversionSequence& seq) {
  if (auto bad = validate(d, seq)) {
    throw ValidationError("cycle " + std::to_string(*bad) + " is invalid", *bad);
  }
  const auto counts = touch_counts(d, seq);
  Difference diff;
  for (std::uint32_t i = 0; i < counts.size(); ++i) {
    if (counts[i] % 2 == 1) diff.reversed_edges.push_back(EdgeId{i});
  }
  return diff;
}

bool is_eulerian(const Digraph& d, std::span<const EdgeId> edges) {
  check_edges_exist(d, edges);
  std::vector<long> balance(d.num_vertices(), 0);
  for (EdgeId e : normalized(EdgeSet(edges.begin(), edges.end()))) {
    ++balance[d.tail(e)];
    --balance[d.head(e)];
  }
  return std::all_of(balance.begin(), balance.end(), [](long b) { return b == 0; });
}

std::vector<DirectedCycle> cycle_decompose(const Digraph& d, std::span<const EdgeId> edges) {
  const EdgeSet pool = normalized(EdgeSet(edges.begin(), edges.end()));
  if (!is_eulerian(d, pool)) {
    throw PreconditionError("edge set is not balanced; it has no cycle decomposition");
  }
  std::vector<bool> available(d.num_edges(), false);
  for (EdgeId e : pool) available[e.value] = true;

  // Per-vertex cursor into the (EdgeId-sorted) out-list.
  std::vector<std::size_t> cursor(d.num_vertices(), 0);
  auto next_out = [&](Vertex v) -> std::optional<EdgeId> {
    const auto out = d.out_edges(v);
    while (cursor[v] < out.size() && !available[out[cursor[v]].value]) ++cursor[v];
    if (cursor[v] == out.size()) return std::nullopt;
    return out[cursor[v]];
  };

  std::vector<DirectedCycle> cycles;
  std::vector<EdgeId> walk;
  std::vector<long> position(d.num_vertices(), -1);  // index in walk of a vertex's out-edge
  for (EdgeId start : pool) {
    if (!available[start.value]) continue;
    walk.clear();
    available[start.value] = false;
    walk.push_back(start);
    position[d.tail(start)] = 0;
    while (!walk.empty()) {
      const Vertex at = d.head(walk.back());
      if (position[at] >= 0) {
        const auto from = walk.begin() + position[at];
        std::vector<EdgeId> cycle(from, walk.end());
        for (EdgeId e : cycle) position[d.tail(e)] = -1;
        walk.erase(from, walk.end());
        cycles.push_back(rotated_to_min(std::move(cycle)));
        continue;
      }
      // Balance guarantees an unused out-edge at every open walk end.
      const auto e = next_out(at);
      if (!e) throw InternalError("cycle decomposition got stuck on a balanced set");
      available[e->value] = false;
      position[at] = static_cast<long>(walk.size());
      walk.push_back(*e);
    }
  }
  return cycles;
}

ReversionSequence canonicalize(const Digraph& d, const ReversionSequence& seq) {
  const Difference diff = difference(d, seq);
  return {cycle_decompose(d, diff.reversed_edges)};
}

ReversionSequence invert(const Digraph& d, const ReversionSequence& seq) {
  if (auto bad = validate(d, seq)) {
    throw ValidationError("cycle " + std::to_string(*bad) + " is invalid", *bad);
  }
  ReversionSequence inv;
  inv.cycles.reserve(seq.size());
  for (auto it = seq.cycles.rbegin(); it != seq.cycles.rend(); ++it) {
    inv.cycles.push_back({std::vector<EdgeId>(it->edges.rbegin(), it->edges.rend())});
  }
  return inv;
}

std::optional<ReversionSequence> reachable(const Digraph& d, const Digraph& target) {
  if (!target.is_reorientation_of(d)) {
    throw InputError("target is not a reorientation of the base digraph");
  }
  EdgeSet diff;
  for (std::uint32_t i = 0; i < d.num_edges(); ++i) {
    if (d.arcs()[i] != target.arcs()[i]) diff.push_back(EdgeId{i});
  }
  if (!is_eulerian(d, diff)) return std::nullopt;
  return ReversionSequence{cycle_decompose(d, diff)};
}

Effect effect_on(const Digraph& d, const ReversionSequence& seq, std::span<const EdgeId> edges) {
  if (auto bad = validate(d, seq)) {
    throw ValidationError("cycle " + std::to_string(*bad) + " is invalid", *bad);
  }
  check_edges_exist(d, edges);
  const EdgeSet wanted = normalized(EdgeSet(edges.begin(), edges.end()));

  std::vector<bool> closure(d.num_edges(), false);
  for (EdgeId e : wanted) closure[e.value] = true;
  std::vector<bool> keep(seq.size(), false);
  for (std::size_t i = seq.size(); i-- > 0;) {
    const auto& c = seq.cycles[i].edges;
    if (std::any_of(c.begin(), c.end(), [&](EdgeId e) { return closure[e.value]; })) {
      keep[i] = true;
      for (EdgeId e : c) closure[e.value] = true;
    }
  }
  Effect effect;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (keep[i]) effect.subsequence.cycles.push_back(seq.cycles[i]);
  }
  const auto counts = touch_counts(d, seq);
  for (EdgeId e : wanted) {
    const Arc a = d.arc(e);
    effect.orientation.emplace_back(e, counts[e.value] % 2 == 1 ? a.reversed() : a);
  }
  return effect;
}

std::vector<DirectedCycle> replace_segments(const Digraph& d,
                                            const std::vector<DirectedCycle>& cycles,
                                            std::span<const EdgeId> forbidden,
                                            const std::map<EdgeId, DirectedPath>& detours) {
  check_edges_exist(d, forbidden);
  std::vector<bool> banned(d.num_edges(), false);
  for (EdgeId e : forbidden) banned[e.value] = true;

  std::vector<bool> used(d.num_edges(), false);
  auto claim = [&](EdgeId e, const char* what) {
    if (used[e.value]) {
      throw InputError(std::string(what) + " reuses edge " + std::to_string(e.value));
    }
    used[e.value] = true;
  };

  std::map<EdgeId, std::pair<Vertex, Vertex>> segments;  // first edge -> endpoints
  EdgeSet retained;
  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    const auto& c = cycles[ci].edges;
    if (!is_directed_cycle(d, c)) {
      throw InputError("cycle " + std::to_string(ci) + " is not a directed cycle");
    }
    for (EdgeId e : c) claim(e, "cycle list");
    const std::size_t len = c.size();
    auto is_banned = [&](std::size_t i) { return banned[c[i % len].value]; };
    if (std::all_of(c.begin(), c.end(), [&](EdgeId e) { return banned[e.value]; })) {
      throw InputError("cycle " + std::to_string(ci) + " lies entirely in the forbidden set");
    }
    for (std::size_t i = 0; i < len; ++i) {
      if (!is_banned(i)) {
        retained.push_back(c[i]);
        continue;
      }
      if (is_banned(i + len - 1)) continue;  // not the start of a segment
      std::size_t j = i;
      while (is_banned(j + 1)) ++j;
      segments.emplace(c[i], std::pair{d.tail(c[i]), d.head(c[j % len])});
    }
  }

  EdgeSet combined = retained;
  for (const auto& [key, path] : detours) {
    auto seg = segments.find(key);
    if (seg == segments.end()) {
      throw InputError("detour keyed by edge " + std::to_string(key.value) +
                       " does not match a forbidden segment");
    }
    if (!is_directed_path(d, path)) {
      throw InputError("detour for edge " + std::to_string(key.value) + " is not a directed path");
    }
    if (path.source != seg->second.first || path.target != seg->second.second) {
      throw InputError("detour for edge " + std::to_string(key.value) +
                       " does not match the segment endpoints");
    }
    for (EdgeId e : path.edges) {
      if (banned[e.value]) {
        throw InputError("detour for edge " + std::to_string(key.value) +
                         " uses forbidden edge " + std::to_string(e.value));
      }
      claim(e, "detour");
      combined.push_back(e);
    }
  }
  for (const auto& [key, ends] : segments) {
    if (!detours.contains(key)) {
      throw InputError("no detour supplied for the segment starting at edge " +
                       std::to_string(key.value));
    }
  }
  if (!is_eulerian(d, combined)) {
    throw InternalError("rerouted cycles are not balanced");
  }
  return cycle_decompose(d, combined);
}

}  // namespace digrev
