#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "geoclique/geometry.hpp"
#include "geoclique/graph.hpp"

namespace geoclique {

using Json = nlohmann::ordered_json;

/// A geometric instance or a plain graph, plus free-form metadata (generator
/// name, seed, source graph, embedding constants).
struct InstanceDocument {
    std::optional<GeometricInstance> geometry;
    std::optional<Graph> graph;
    Json metadata = Json::object();

    /// The graph to solve on: the intersection graph for geometry.
    Graph resolve_graph() const;
};

/// Accepts the JSON document format or, when the text does not start with
/// '{', the DIMACS edge-list format. Throws MalformedInput with line/column.
InstanceDocument parse_instance(std::string_view text);
InstanceDocument read_instance_file(const std::string& path);

/// Canonical JSON: fixed key order, shortest round-trip floats, trailing
/// newline. parse_instance(write_instance(d)) == d.
std::string write_instance(const InstanceDocument& doc);
Json instance_to_json(const InstanceDocument& doc);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

} // namespace geoclique
