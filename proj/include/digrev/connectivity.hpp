#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "digrev/graph.hpp"

namespace digrev {

/// Pairwise edge-disjoint source->target paths, optionally with a cut that
/// meets every path in exactly one edge.
struct PathSystem {
  Vertex source = 0;
  Vertex target = 0;
  std::vector<DirectedPath> paths;
  std::optional<Cut> cut;
};

struct FlipSeparation {
  Digraph flipped;
  PathSystem system;
  /// Vertices reachable from the source without using a cut edge.
  std::vector<Vertex> side;
  /// out(side) before the flip; these are exactly the flipped boundary edges.
  EdgeSet reversed_cut;
  /// in(side) after the flip: the reversed cut plus the old in-edges.
  EdgeSet in_edges_after;
};

/// Maximum number of edge-disjoint u->v paths (unit-capacity max flow).
/// Throws InputError when u == v.
std::size_t lambda(const Digraph& d, Vertex u, Vertex v);

/// Maximum edge-disjoint path family with an orthogonal cut.
///
/// The flow comes from breadth-first augmenting paths with every edge as an
/// independent unit-capacity arc. Paths are peeled off the flow by walking
/// from u along the lowest unused flow edge; closed detours are dropped.
/// The cut side W is the set of vertices reachable from u without a cut
/// edge, and the cut is out(W). Orthogonality is checked before returning.
PathSystem menger_system(const Digraph& d, Vertex u, Vertex v);

/// Every way in which `ps` fails to be a path system with an orthogonal
/// cut in `d`. Empty means valid.
std::vector<std::string> path_system_violations(const Digraph& d, const PathSystem& ps);

/// Raw reorientation of exactly the listed edges. Unlike a reversion
/// sequence this need not be reachable from `d`.
Digraph reverse_edge_set(const Digraph& d, std::span<const EdgeId> edges);

/// Reverses the union of a maximum path system and checks that the result
/// has no u->v path. Throws InternalError if separation fails.
FlipSeparation flip_separation(const Digraph& d, Vertex u, Vertex v);

}  // namespace digrev
