#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace digrev {

/// Dense index of a vertex inside its Digraph (declaration order of labels).
using Vertex = std::uint32_t;

/// Stable identifier of an undirected edge. Reorientations keep the id and
/// the endpoint pair; only the direction may change.
struct EdgeId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend constexpr bool operator==(Arc, Arc) = default;
  constexpr Arc reversed() const { return {head, tail}; }
};

/// Sorted, duplicate-free list of edge ids.
using EdgeSet = std::vector<EdgeId>;

/// Returns `edges` sorted and deduplicated.
EdgeSet normalized(EdgeSet edges);

/// Finite directed multigraph without loops.
///
/// Values are immutable. Reorienting edges yields a new Digraph that shares
/// the vertex table with the original, so snapshots along a reversion
/// sequence are cheap.
class Digraph {
 public:
  Digraph();

  /// Throws InputError on duplicate labels, loops, or endpoints out of range.
  Digraph(std::vector<std::string> labels, std::vector<Arc> arcs);

  /// Convenience constructor from label pairs; edge i gets EdgeId i.
  static Digraph from_edges(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t num_vertices() const { return labels().size(); }
  std::size_t num_edges() const { return arcs_.size(); }

  const std::vector<std::string>& labels() const { return vertices_->labels; }
  const std::string& label(Vertex v) const;
  std::optional<Vertex> find_vertex(std::string_view label) const;
  /// Like find_vertex but throws InputError for unknown labels.
  Vertex vertex(std::string_view label) const;

  const Arc& arc(EdgeId e) const;
  Vertex tail(EdgeId e) const { return arc(e).tail; }
  Vertex head(EdgeId e) const { return arc(e).head; }
  std::span<const Arc> arcs() const { return arcs_; }

  /// Outgoing / incoming edges of `v`, in increasing EdgeId order.
  std::span<const EdgeId> out_edges(Vertex v) const;
  std::span<const EdgeId> in_edges(Vertex v) const;

  /// Same vertex table and edge ids, new directions. `arcs` must have one
  /// entry per edge with the same endpoint pair (InputError otherwise).
  Digraph reoriented(std::vector<Arc> arcs) const;

  /// Reverses exactly the listed edges (duplicates are ignored).
  Digraph reversed(std::span<const EdgeId> edges) const;

  /// True iff both digraphs have the same labels and the same unordered
  /// endpoint pair for every EdgeId.
  bool is_reorientation_of(const Digraph& other) const;

  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  struct VertexTable {
    std::vector<std::string> labels;
    std::unordered_map<std::string, Vertex> index;
  };

  Digraph(std::shared_ptr<const VertexTable> vertices, std::vector<Arc> arcs);
  void build_adjacency();

  std::shared_ptr<const VertexTable> vertices_;
  std::vector<Arc> arcs_;
  std::vector<std::uint32_t> out_offset_;
  std::vector<std::uint32_t> in_offset_;
  std::vector<EdgeId> out_list_;
  std::vector<EdgeId> in_list_;
};

/// Closed walk given as edge ids in traversal order.
struct DirectedCycle {
  std::vector<EdgeId> edges;

  friend bool operator==(const DirectedCycle&, const DirectedCycle&) = default;
};

struct DirectedPath {
  Vertex source = 0;
  Vertex target = 0;
  std::vector<EdgeId> edges;

  friend bool operator==(const DirectedPath&, const DirectedPath&) = default;
};

struct Cut {
  std::vector<Vertex> side;  // sorted
  EdgeSet out_edges;
};

/// True iff `edges` (in order) is a directed cycle of the orientation `arcs`
/// with pairwise distinct vertices and at least two edges.
bool is_directed_cycle(std::span<const Arc> arcs, std::span<const EdgeId> edges);
bool is_directed_cycle(const Digraph& d, std::span<const EdgeId> edges);

/// True iff `p` is a directed path of `d` from p.source to p.target with
/// pairwise distinct vertices and source != target.
bool is_directed_path(const Digraph& d, const DirectedPath& p);

/// Builds a path from its edges, deriving the endpoints. Throws InputError if
/// the edges do not form a directed path of `d`.
DirectedPath make_path(const Digraph& d, std::vector<EdgeId> edges);

/// Vertex sequence v0, v1, ..., vk visited by a path.
std::vector<Vertex> path_vertices(const Digraph& d, const DirectedPath& p);

/// Every simple directed cycle, each rotated to start at its smallest
/// vertex. Parallel edges give distinct cycles. Stops after `limit` cycles.
std::vector<DirectedCycle> simple_cycles(
    const Digraph& d,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Strong components, each sorted; components ordered by smallest vertex.
std::vector<std::vector<Vertex>> strong_components(const Digraph& d);

/// `reach[w]` is true iff w is reachable from `u` (u reaches itself).
std::vector<bool> reachable_set(const Digraph& d, Vertex u);

bool reachable_vertex(const Digraph& d, Vertex u, Vertex v);
/// Label-based variant; throws InputError for unknown labels.
bool reachable_vertex(const Digraph& d, std::string_view u, std::string_view v);

/// out_D(W): edges with tail in `side` and head outside.
Cut out_edges(const Digraph& d, std::span<const Vertex> side);
/// in_D(W): edges with head in `side` and tail outside.
EdgeSet in_edges(const Digraph& d, std::span<const Vertex> side);

bool is_acyclic(const Digraph& d);

/// Vertices 0..n, edges i->i+1 for i < n and back-arcs i+2->i.
/// The forward edges get ids 0..n-1, back-arcs follow in increasing i.
Digraph gen_ladder(int n);

/// `m` edges with uniformly random distinct endpoints on vertices 0..n-1.
Digraph gen_random(int n, int m, std::uint64_t seed);

/// One edge per unordered pair, each direction chosen by a fair coin.
Digraph gen_tournament(int n, std::uint64_t seed);

/// Labels "0", "1", ..., "n-1".
std::vector<std::string> numbered_labels(std::size_t n);

}  // namespace digrev
