#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "digrev/graph.hpp"

namespace digrev {

/// Ordered list of directed cycles. Cycle i must be a directed cycle of the
/// orientation obtained by reversing cycles 0..i-1 in the base digraph.
struct ReversionSequence {
  std::vector<DirectedCycle> cycles;

  std::size_t size() const { return cycles.size(); }
  bool empty() const { return cycles.empty(); }
  friend bool operator==(const ReversionSequence&, const ReversionSequence&) = default;
};

/// Edges whose final orientation differs from the base, oriented as in the
/// base digraph.
struct Difference {
  EdgeSet reversed_edges;
};

/// Index of the first cycle that is not valid in its intermediate
/// orientation, or nullopt when the whole sequence is valid.
std::optional<std::size_t> validate(const Digraph& d, const ReversionSequence& seq);

/// Applies every cycle in turn. Throws ValidationError naming the first
/// invalid position.
Digraph apply(const Digraph& d, const ReversionSequence& seq);

/// Number of cycles containing an orientation of each edge, indexed by
/// EdgeId value.
std::vector<std::uint32_t> touch_counts(const Digraph& d, const ReversionSequence& seq);

/// E(seq): every edge touched at least once.
EdgeSet touched_edges(const ReversionSequence& seq);

/// Edges touched an odd number of times. Throws ValidationError when `seq`
/// is not valid for `d`.
Difference difference(const Digraph& d, const ReversionSequence& seq);

/// True iff every vertex has equal in- and out-degree inside `edges`
/// (oriented as in `d`).
bool is_eulerian(const Digraph& d, std::span<const EdgeId> edges);

/// Splits a balanced edge set into pairwise edge-disjoint directed cycles of
/// `d`. Walks greedily from the lowest unused EdgeId, always taking the
/// lowest unused out-edge, and closes a cycle at the first repeated vertex.
/// Each cycle is rotated to start at its smallest EdgeId.
/// Throws PreconditionError when `edges` is not Eulerian.
std::vector<DirectedCycle> cycle_decompose(const Digraph& d, std::span<const EdgeId> edges);

/// Equivalent sequence of pairwise edge-disjoint cycles of `d` that touches
/// each edge at most once and only uses edges of E(seq).
ReversionSequence canonicalize(const Digraph& d, const ReversionSequence& seq);

/// Sequence valid for apply(d, seq) that restores `d`: the cycles in reverse
/// order, each traversed backwards.
ReversionSequence invert(const Digraph& d, const ReversionSequence& seq);

/// Edge-disjoint cycle sequence turning `d` into `target`, or nullopt when
/// the set of differing edges is not Eulerian (then no reversion sequence
/// exists). Throws InputError if `target` is not a reorientation of `d`.
std::optional<ReversionSequence> reachable(const Digraph& d, const Digraph& target);

struct Effect {
  /// Final orientation of each requested edge, sorted by EdgeId.
  std::vector<std::pair<EdgeId, Arc>> orientation;
  /// Subsequence of the input (original order) that agrees with it on the
  /// requested edges.
  ReversionSequence subsequence;
};

/// Orientation of `edges` after `seq`, plus a subsequence that suffices to
/// produce it. The subsequence keeps, scanning backwards, each cycle that
/// touches the requested edges or an edge of a cycle already kept.
Effect effect_on(const Digraph& d, const ReversionSequence& seq, std::span<const EdgeId> edges);

/// Reroutes edge-disjoint cycles around a forbidden edge set.
///
/// A segment is a maximal run of consecutive cycle edges lying in
/// `forbidden`; it is keyed by its first EdgeId in traversal order. Each
/// segment needs a detour path in `detours` with the same endpoints that
/// avoids `forbidden`. Detours must be pairwise edge-disjoint and disjoint
/// from the retained cycle edges. The result is the cycle decomposition of
/// the retained edges plus the detours.
std::vector<DirectedCycle> replace_segments(const Digraph& d,
                                            const std::vector<DirectedCycle>& cycles,
                                            std::span<const EdgeId> forbidden,
                                            const std::map<EdgeId, DirectedPath>& detours);

}  // namespace digrev
