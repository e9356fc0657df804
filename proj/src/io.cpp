#include "digrev/io.hpp"

#include <algorithm>
#include <sstream>

#include "digrev/errors.hpp"

namespace digrev::io {

namespace {

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // nlohmann reports the byte count consumed when the error was detected.
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = line_and_column(text, at);
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(column),
                     line, column);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Digraph& d) {
  Json edges = Json::array();
  for (std::uint32_t i = 0; i < d.num_edges(); ++i) {
    const Arc a = d.arcs()[i];
    edges.push_back({{"id", i}, {"tail", d.label(a.tail)}, {"head", d.label(a.head)}});
  }
  return {{"vertices", d.labels()}, {"edges", std::move(edges)}};
}

Digraph digraph_from_json(const Json& j) {
  try {
    std::vector<std::string> labels;
    for (const auto& v : member(j, "vertices")) labels.push_back(v.get<std::string>());
    std::unordered_map<std::string, Vertex> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], Vertex(i));

    const Json& edges = member(j, "edges");
    if (!edges.is_array()) throw InputError("'edges' must be an array");
    std::vector<Arc> arcs(edges.size());
    std::vector<bool> seen(edges.size(), false);
    for (const auto& e : edges) {
      const auto id = member(e, "id").get<long long>();
      if (id < 0 || static_cast<std::size_t>(id) >= edges.size() || seen[id]) {
        throw InputError("edge ids must be exactly 0.." + std::to_string(edges.size() - 1) +
                         " (offending id " + std::to_string(id) + ")");
      }
      seen[id] = true;
      auto endpoint = [&](const char* key) {
        const auto label = member(e, key).get<std::string>();
        auto it = index.find(label);
        if (it == index.end()) throw InputError("edge " + std::to_string(id) + " names unknown vertex '" + label + "'");
        return it->second;
      };
      arcs[id] = {endpoint("tail"), endpoint("head")};
    }
    return Digraph(std::move(labels), std::move(arcs));
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid digraph document: ") + e.what());
  }
}

Digraph parse_digraph(std::string_view text) { return digraph_from_json(parse_json(text)); }

std::string to_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph D {\n";
  for (const auto& label : d.labels()) out << "  " << dot_quote(label) << ";\n";
  for (std::uint32_t i = 0; i < d.num_edges(); ++i) {
    const Arc a = d.arcs()[i];
    out << "  " << dot_quote(d.label(a.tail)) << " -> " << dot_quote(d.label(a.head))
        << " [label=\"" << i << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

Json edge_list(std::span<const EdgeId> edges) {
  Json out = Json::array();
  for (EdgeId e : edges) out.push_back(e.value);
  return out;
}

std::vector<EdgeId> edges_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a list of edge ids");
  std::vector<EdgeId> edges;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw InputError("edge ids must be non-negative integers");
    edges.push_back(EdgeId{x.get<std::uint32_t>()});
  }
  return edges;
}

Json to_json(const ReversionSequence& seq) {
  Json out = Json::array();
  for (const auto& c : seq.cycles) out.push_back(edge_list(c.edges));
  return out;
}

ReversionSequence sequence_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("a reversion sequence is a list of cycles");
  ReversionSequence seq;
  for (const auto& c : j) seq.cycles.push_back({edges_from_json(c)});
  return seq;
}

Json vertex_list(const Digraph& d, std::span<const Vertex> vertices) {
  Json out = Json::array();
  for (Vertex v : vertices) out.push_back(d.label(v));
  return out;
}

Json to_json(const Digraph& d, const Coloring& c) {
  Json assignment = Json::object();
  for (Vertex v = 0; v < c.color.size(); ++v) assignment[d.label(v)] = c.color[v];
  return {{"num_colors", c.num_colors}, {"assignment", std::move(assignment)}};
}

Json to_json(const Digraph& d, const OrderCertificate& cert) {
  return {{"k", cert.k}, {"order", vertex_list(d, cert.order)}};
}

std::vector<Vertex> order_from_labels(const Digraph& d, const std::vector<std::string>& labels) {
  std::vector<Vertex> order;
  for (const auto& l : labels) order.push_back(d.vertex(l));
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() != d.num_vertices() ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("order must list every vertex exactly once");
  }
  return order;
}

Json to_json(const Digraph& d, const PathSystem& ps) {
  Json paths = Json::array();
  for (const auto& p : ps.paths) paths.push_back(edge_list(p.edges));
  Json out = {{"source", d.label(ps.source)}, {"target", d.label(ps.target)}, {"paths", paths}};
  if (ps.cut) {
    out["cut"] = edge_list(ps.cut->out_edges);
    out["side"] = vertex_list(d, ps.cut->side);
  }
  return out;
}

Json to_json(const Digraph& d, const StagedFlip& flip) {
  Json returns = Json::array();
  for (const auto& q : flip.return_paths) returns.push_back(edge_list(q.edges));
  Json touches = Json::object();
  for (std::size_t i = 0; i < flip.touch_counts.size(); ++i) {
    if (flip.touch_counts[i] > 0) touches[std::to_string(i)] = flip.touch_counts[i];
  }
  return {{"path", edge_list(flip.target_path.edges)},
          {"returns", std::move(returns)},
          {"sequence", to_json(flip.sequence)},
          {"stage_ends", flip.stage_ends},
          {"touch_counts", std::move(touches)},
          {"final", to_json(apply(d, flip.sequence))}};
}

Json to_json(const Digraph& d, const TwoChainResult& r) {
  return {{"order", vertex_list(d, r.order)},
          {"sequence", to_json(r.sequence)},
          {"final", to_json(r.final)}};
}

Json to_json(const OrientationClasses& classes) {
  return {{"edges", classes.num_edges}, {"classes", classes.classes}};
}

}  // namespace digrev::io
