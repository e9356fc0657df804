#include "digrev/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "digrev/errors.hpp"

namespace digrev {

EdgeSet normalized(EdgeSet edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Digraph::Digraph() : Digraph(std::vector<std::string>{}, std::vector<Arc>{}) {}

Digraph::Digraph(std::vector<std::string> labels, std::vector<Arc> arcs) {
  auto table = std::make_shared<VertexTable>();
  table->index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!table->index.emplace(labels[i], static_cast<Vertex>(i)).second) {
      throw InputError("duplicate vertex label '" + labels[i] + "'");
    }
  }
  table->labels = std::move(labels);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc a = arcs[i];
    if (a.tail >= table->labels.size() || a.head >= table->labels.size()) {
      throw InputError("edge " + std::to_string(i) + " has an endpoint out of range");
    }
    if (a.tail == a.head) {
      throw InputError("edge " + std::to_string(i) + " is a loop at '" +
                       table->labels[a.tail] + "'");
    }
  }
  vertices_ = std::move(table);
  arcs_ = std::move(arcs);
  build_adjacency();
}

Digraph::Digraph(std::shared_ptr<const VertexTable> vertices, std::vector<Arc> arcs)
    : vertices_(std::move(vertices)), arcs_(std::move(arcs)) {
  build_adjacency();
}

Digraph Digraph::from_edges(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, Vertex> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<Vertex>(i));
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (const auto& [t, h] : edges) {
    auto ti = index.find(t);
    auto hi = index.find(h);
    if (ti == index.end()) throw InputError("unknown vertex '" + t + "'");
    if (hi == index.end()) throw InputError("unknown vertex '" + h + "'");
    arcs.push_back({ti->second, hi->second});
  }
  return Digraph(std::move(labels), std::move(arcs));
}

void Digraph::build_adjacency() {
  const std::size_t n = vertices_->labels.size();
  out_offset_.assign(n + 1, 0);
  in_offset_.assign(n + 1, 0);
  for (const Arc& a : arcs_) {
    ++out_offset_[a.tail + 1];
    ++in_offset_[a.head + 1];
  }
  std::partial_sum(out_offset_.begin(), out_offset_.end(), out_offset_.begin());
  std::partial_sum(in_offset_.begin(), in_offset_.end(), in_offset_.begin());
  out_list_.assign(arcs_.size(), EdgeId{});
  in_list_.assign(arcs_.size(), EdgeId{});
  std::vector<std::uint32_t> out_fill(out_offset_.begin(), out_offset_.end() - 1);
  std::vector<std::uint32_t> in_fill(in_offset_.begin(), in_offset_.end() - 1);
  for (std::uint32_t i = 0; i < arcs_.size(); ++i) {
    out_list_[out_fill[arcs_[i].tail]++] = EdgeId{i};
    in_list_[in_fill[arcs_[i].head]++] = EdgeId{i};
  }
}

const std::string& Digraph::label(Vertex v) const {
  if (v >= num_vertices()) throw InputError("vertex index out of range");
  return vertices_->labels[v];
}

std::optional<Vertex> Digraph::find_vertex(std::string_view label) const {
  auto it = vertices_->index.find(std::string(label));
  if (it == vertices_->index.end()) return std::nullopt;
  return it->second;
}

Vertex Digraph::vertex(std::string_view label) const {
  if (auto v = find_vertex(label)) return *v;
  throw InputError("unknown vertex '" + std::string(label) + "'");
}

const Arc& Digraph::arc(EdgeId e) const {
  if (e.value >= arcs_.size()) {
    throw InputError("unknown edge id " + std::to_string(e.value));
  }
  return arcs_[e.value];
}

std::span<const EdgeId> Digraph::out_edges(Vertex v) const {
  return std::span<const EdgeId>(out_list_).subspan(out_offset_[v],
                                                    out_offset_[v + 1] - out_offset_[v]);
}

std::span<const EdgeId> Digraph::in_edges(Vertex v) const {
  return std::span<const EdgeId>(in_list_).subspan(in_offset_[v],
                                                   in_offset_[v + 1] - in_offset_[v]);
}

Digraph Digraph::reoriented(std::vector<Arc> arcs) const {
  if (arcs.size() != arcs_.size()) {
    throw InputError("reorientation must keep the number of edges");
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i] != arcs_[i] && arcs[i] != arcs_[i].reversed()) {
      throw InputError("edge " + std::to_string(i) + " changed its endpoints");
    }
  }
  return Digraph(vertices_, std::move(arcs));
}

Digraph Digraph::reversed(std::span<const EdgeId> edges) const {
  std::vector<bool> flip(arcs_.size(), false);
  for (EdgeId e : edges) {
    arc(e);
    flip[e.value] = true;
  }
  std::vector<Arc> arcs = arcs_;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (flip[i]) arcs[i] = arcs[i].reversed();
  }
  return Digraph(vertices_, std::move(arcs));
}

bool Digraph::is_reorientation_of(const Digraph& other) const {
  if (labels() != other.labels() || num_edges() != other.num_edges()) return false;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (arcs_[i] != other.arcs_[i] && arcs_[i] != other.arcs_[i].reversed()) return false;
  }
  return true;
}

bool operator==(const Digraph& a, const Digraph& b) {
  return a.arcs_ == b.arcs_ && a.labels() == b.labels();
}

bool is_directed_cycle(std::span<const Arc> arcs, std::span<const EdgeId> edges) {
  if (edges.size() < 2) return false;
  std::vector<Vertex> seen;
  seen.reserve(edges.size());
  for (EdgeId e : edges) {
    if (e.value >= arcs.size()) return false;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Arc a = arcs[edges[i].value];
    const Arc next = arcs[edges[(i + 1) % edges.size()].value];
    if (a.head != next.tail) return false;
    seen.push_back(a.tail);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool is_directed_cycle(const Digraph& d, std::span<const EdgeId> edges) {
  return is_directed_cycle(d.arcs(), edges);
}

bool is_directed_path(const Digraph& d, const DirectedPath& p) {
  if (p.edges.empty() || p.source == p.target) return false;
  if (p.source >= d.num_vertices() || p.target >= d.num_vertices()) return false;
  std::vector<Vertex> seen{p.source};
  Vertex at = p.source;
  for (EdgeId e : p.edges) {
    if (e.value >= d.num_edges() || d.tail(e) != at) return false;
    at = d.head(e);
    seen.push_back(at);
  }
  if (at != p.target) return false;
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

DirectedPath make_path(const Digraph& d, std::vector<EdgeId> edges) {
  if (edges.empty()) throw InputError("a path needs at least one edge");
  for (EdgeId e : edges) d.arc(e);
  DirectedPath p{d.tail(edges.front()), d.head(edges.back()), std::move(edges)};
  if (!is_directed_path(d, p)) throw InputError("edges do not form a directed path");
  return p;
}

std::vector<Vertex> path_vertices(const Digraph& d, const DirectedPath& p) {
  std::vector<Vertex> out{p.source};
  for (EdgeId e : p.edges) out.push_back(d.head(e));
  return out;
}

std::vector<DirectedCycle> simple_cycles(const Digraph& d, std::size_t limit) {
  std::vector<DirectedCycle> cycles;
  const std::size_t n = d.num_vertices();
  std::vector<bool> on_path(n, false);
  std::vector<EdgeId> stack;

  // Depth-first search restricted to vertices > start; each cycle is found
  // exactly once, from its smallest vertex.
  auto search = [&](auto&& self, Vertex start, Vertex at) -> void {
    for (EdgeId e : d.out_edges(at)) {
      if (cycles.size() >= limit) return;
      const Vertex next = d.head(e);
      if (next == start) {
        stack.push_back(e);
        cycles.push_back({stack});
        stack.pop_back();
      } else if (next > start && !on_path[next]) {
        on_path[next] = true;
        stack.push_back(e);
        self(self, start, next);
        stack.pop_back();
        on_path[next] = false;
      }
    }
  };
  for (Vertex s = 0; s < n && cycles.size() < limit; ++s) {
    on_path[s] = true;
    search(search, s, s);
    on_path[s] = false;
  }
  return cycles;
}

std::vector<std::vector<Vertex>> strong_components(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> components;
  std::uint32_t counter = 0;

  struct Frame {
    Vertex v;
    std::size_t next_edge;
  };
  std::vector<Frame> call;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto out = d.out_edges(f.v);
      if (f.next_edge < out.size()) {
        const Vertex w = d.head(out[f.next_edge++]);
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

std::vector<bool> reachable_set(const Digraph& d, Vertex u) {
  std::vector<bool> seen(d.num_vertices(), false);
  if (u >= d.num_vertices()) throw InputError("vertex index out of range");
  std::vector<Vertex> todo{u};
  seen[u] = true;
  while (!todo.empty()) {
    const Vertex v = todo.back();
    todo.pop_back();
    for (EdgeId e : d.out_edges(v)) {
      const Vertex w = d.head(e);
      if (!seen[w]) {
        seen[w] = true;
        todo.push_back(w);
      }
    }
  }
  return seen;
}

bool reachable_vertex(const Digraph& d, Vertex u, Vertex v) {
  if (v >= d.num_vertices()) throw InputError("vertex index out of range");
  return reachable_set(d, u)[v];
}

bool reachable_vertex(const Digraph& d, std::string_view u, std::string_view v) {
  return reachable_vertex(d, d.vertex(u), d.vertex(v));
}

namespace {

std::vector<bool> membership(const Digraph& d, std::span<const Vertex> side) {
  std::vector<bool> in(d.num_vertices(), false);
  for (Vertex v : side) {
    if (v >= d.num_vertices()) throw InputError("vertex index out of range");
    in[v] = true;
  }
  return in;
}

}  // namespace

Cut out_edges(const Digraph& d, std::span<const Vertex> side) {
  const auto in = membership(d, side);
  Cut cut;
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    if (in[v]) cut.side.push_back(v);
  }
  for (std::uint32_t i = 0; i < d.num_edges(); ++i) {
    const Arc a = d.arcs()[i];
    if (in[a.tail] && !in[a.head]) cut.out_edges.push_back(EdgeId{i});
  }
  return cut;
}

EdgeSet in_edges(const Digraph& d, std::span<const Vertex> side) {
  const auto in = membership(d, side);
  EdgeSet result;
  for (std::uint32_t i = 0; i < d.num_edges(); ++i) {
    const Arc a = d.arcs()[i];
    if (!in[a.tail] && in[a.head]) result.push_back(EdgeId{i});
  }
  return result;
}

bool is_acyclic(const Digraph& d) {
  std::vector<std::size_t> indeg(d.num_vertices(), 0);
  for (const Arc& a : d.arcs()) ++indeg[a.head];
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
      if (--indeg[d.head(e)] == 0) ready.push_back(d.head(e));
    }
  }
  return removed == d.num_vertices();
}

std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

Digraph gen_ladder(int n) {
  if (n < 2) throw InputError("ladder size must be at least 2");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({Vertex(i), Vertex(i + 1)});
  for (int i = 0; i + 2 <= n; ++i) arcs.push_back({Vertex(i + 2), Vertex(i)});
  return Digraph(numbered_labels(n + 1), std::move(arcs));
}

Digraph gen_random(int n, int m, std::uint64_t seed) {
  if (n < 1) throw InputError("need at least one vertex");
  if (m < 0) throw InputError("edge count must be non-negative");
  if (n == 1 && m > 0) throw InputError("a single vertex admits no loop-free edge");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, Vertex(n - 1));
  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (int i = 0; i < m; ++i) {
    Vertex t = pick(rng), h = pick(rng);
    while (h == t) h = pick(rng);
    arcs.push_back({t, h});
  }
  return Digraph(numbered_labels(n), std::move(arcs));
}

Digraph gen_tournament(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("need at least one vertex");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < Vertex(n); ++i) {
    for (Vertex j = i + 1; j < Vertex(n); ++j) {
      arcs.push_back(coin(rng) ? Arc{i, j} : Arc{j, i});
    }
  }
  return Digraph(numbered_labels(n), std::move(arcs));
}

}  // namespace digrev
