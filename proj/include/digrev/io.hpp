#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "digrev/connectivity.hpp"
#include "digrev/dichromatic.hpp"
#include "digrev/graph.hpp"
#include "digrev/reversion.hpp"
#include "digrev/structural.hpp"

namespace digrev::io {

using Json = nlohmann::json;

/// Parses JSON text; throws ParseError with the 1-based line and column of
/// the offending byte.
Json parse_json(std::string_view text);

/// Serialized form: {"edges": [{"head", "id", "tail"}...], "vertices": [...]}.
/// Keys are emitted in sorted order, so dump(to_json(d)) is canonical.
Json to_json(const Digraph& d);
/// Accepts edges in any order; ids must be exactly 0..m-1.
Digraph digraph_from_json(const Json& j);
Digraph parse_digraph(std::string_view text);

/// Canonical text: two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

/// Graphviz export. Vertices are declared in index order, edges in EdgeId
/// order, each labelled with its id.
std::string to_dot(const Digraph& d);

/// A sequence is a list of cycles, each a list of edge ids in traversal
/// order. Orientation is implied by the digraph the sequence acts on.
Json to_json(const ReversionSequence& seq);
ReversionSequence sequence_from_json(const Json& j);

Json edge_list(std::span<const EdgeId> edges);
std::vector<EdgeId> edges_from_json(const Json& j);

Json to_json(const Digraph& d, const Coloring& c);
Json to_json(const Digraph& d, const OrderCertificate& cert);
/// Order given as a list of vertex labels.
std::vector<Vertex> order_from_labels(const Digraph& d, const std::vector<std::string>& labels);

Json to_json(const Digraph& d, const PathSystem& ps);
Json to_json(const Digraph& d, const StagedFlip& flip);
Json to_json(const Digraph& d, const TwoChainResult& r);
Json to_json(const OrientationClasses& classes);

Json vertex_list(const Digraph& d, std::span<const Vertex> vertices);

}  // namespace digrev::io
