#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "digrev/connectivity.hpp"
#include "digrev/graph.hpp"
#include "digrev/reversion.hpp"

namespace digrev {

/// Reversal of a u->v path P paid for by a chain of v->u return paths.
///
/// Stage 0 reverses the cycles of P together with Q0. Stage i >= 1 reverses
/// the cycles of (reversed Q[i-1]) together with Q[i], which restores Q[i-1].
/// The net effect reverses P and the last return path only.
struct StagedFlip {
  DirectedPath target_path;
  std::vector<DirectedPath> return_paths;
  ReversionSequence sequence;
  /// Index into `sequence` one past the last cycle of each stage.
  std::vector<std::size_t> stage_ends;
  /// Touch count per EdgeId value.
  std::vector<std::uint32_t> touch_counts;
};

struct TwoChainResult {
  /// Vertices by outdegree, largest first; ties broken by vertex index.
  std::vector<Vertex> order;
  ReversionSequence sequence;
  Digraph final;
};

/// Reachability classes of the whole orientation space of a digraph.
///
/// An orientation is a bitmask over EdgeId order: bit i set means edge i is
/// reversed relative to the input digraph.
struct OrientationClasses {
  std::size_t num_edges = 0;
  /// class_of[mask] is the class index; classes are numbered in order of
  /// their smallest mask.
  std::vector<std::uint32_t> class_of;
  /// Members of each class, ascending.
  std::vector<std::vector<std::uint32_t>> classes;
};

inline constexpr std::size_t kDefaultOracleEdgeLimit = 10;

/// Throws InputError when the paths are not pairwise edge-disjoint, do not
/// run u->v (for `p`) and v->u (for each return path), or `qs` is empty.
StagedFlip flip_path_staged(const Digraph& d, const DirectedPath& p,
                            const std::vector<DirectedPath>& qs);

/// Runs flip_path_staged for each path of `ps` in turn, with
/// `returns_per_path[i]` as the return chain of path i. Every path and
/// return path must be pairwise edge-disjoint and avoid `forbidden`.
ReversionSequence flip_path_system_staged(const Digraph& d, const PathSystem& ps,
                                          const std::vector<std::vector<DirectedPath>>& returns_per_path,
                                          std::span<const EdgeId> forbidden = {});

bool is_tournament(const Digraph& d);

/// Reorients a tournament so that every edge between two vertices at odd
/// positions of the outdegree order, and every edge between two vertices
/// at even positions, points forward.
///
/// Backward same-parity edges must be reversed. They are completed to a
/// balanced set by choosing cross-parity edges through a feasibility flow;
/// the balanced set is then decomposed into edge-disjoint cycles.
TwoChainResult tournament_two_chain(const Digraph& t);

/// Breadth-first search over all 2^|E| orientations where a move reverses
/// one simple directed cycle. Throws ResourceError above `max_edges`.
OrientationClasses orientation_space_oracle(const Digraph& d,
                                            std::size_t max_edges = kDefaultOracleEdgeLimit);

/// Orientation of `d` with the edges in `mask` reversed.
Digraph orientation_from_mask(const Digraph& d, std::uint64_t mask);

}  // namespace digrev
