#include "geoclique/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "geoclique/dimacs.hpp"
#include "geoclique/errors.hpp"

namespace geoclique {

namespace {

constexpr const char* kInstanceFormat = "geoclique-instance";
constexpr int kVersion = 1;

// nlohmann reports a byte offset; convert it to line and column.
MalformedInput json_error(std::string_view text, const nlohmann::json::parse_error& e) {
    int line = 1;
    int column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    std::string what = e.what();
    if (const auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    return MalformedInput("invalid JSON: " + what, line, column);
}

const Json& field(const Json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw MalformedInput(std::string("missing field '") + key + "'");
    return *it;
}

template <typename T>
T as(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw MalformedInput(std::string("field '") + what + "' has the wrong type");
    }
}

Json point_json(const Point& p) {
    Json a = Json::array();
    for (int i = 0; i < p.dim; ++i) a.push_back(p[i]);
    return a;
}

Point point_from(const Json& j, int dim, std::size_t index) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw MalformedInput("object " + std::to_string(index) + " needs " + std::to_string(dim) + " coordinates");
    Point p = Point::of_dim(dim);
    for (int i = 0; i < dim; ++i) {
        if (!j[i].is_number()) throw MalformedInput("object " + std::to_string(index) + " has a non-numeric coordinate");
        p[i] = j[i].get<double>();
    }
    return p;
}

} // namespace

Graph InstanceDocument::resolve_graph() const {
    if (graph) return *graph;
    if (geometry) return intersection_graph(*geometry).graph;
    throw MalformedInput("instance holds neither a graph nor geometry");
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.n();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.weighted()) j["weights"] = std::vector<double>(g.weights().begin(), g.weights().end());
    if (g.has_labels()) {
        Json labels = Json::array();
        for (Vertex v = 0; v < g.n(); ++v) labels.push_back(g.label(v));
        j["labels"] = std::move(labels);
    }
    return j;
}

Graph graph_from_json(const Json& j) {
    const int n = as<int>(field(j, "n"), "n");
    if (n < 0) throw MalformedInput("field 'n' must be non-negative");
    std::vector<Edge> edges;
    for (const auto& e : field(j, "edges")) {
        if (!e.is_array() || e.size() != 2) throw MalformedInput("each edge must be a pair");
        edges.emplace_back(as<int>(e[0], "edges"), as<int>(e[1], "edges"));
    }
    Graph g = Graph::from_edge_list(n, edges);
    if (j.contains("weights")) g = g.with_weights(as<std::vector<double>>(j["weights"], "weights"));
    if (j.contains("labels")) {
        auto labels = as<std::vector<std::string>>(j["labels"], "labels");
        if (static_cast<int>(labels.size()) != n) throw MalformedInput("labels must have n entries");
        g = g.with_labels(std::move(labels));
    }
    return g;
}

Json instance_to_json(const InstanceDocument& doc) {
    Json j;
    j["format"] = kInstanceFormat;
    j["version"] = kVersion;
    if (doc.geometry) {
        const auto& inst = *doc.geometry;
        j["kind"] = inst.kind == InstanceKind::balls ? "balls" : "points";
        j["dim"] = inst.dim;
        if (inst.kind == InstanceKind::balls) {
            Json balls = Json::array();
            for (const auto& b : inst.balls) balls.push_back({{"center", point_json(b.center)}, {"radius", b.radius}});
            j["balls"] = std::move(balls);
        } else {
            j["threshold"] = inst.threshold;
            Json points = Json::array();
            for (const auto& p : inst.points) points.push_back(point_json(p));
            j["points"] = std::move(points);
        }
        if (!inst.weights.empty()) j["weights"] = inst.weights;
    } else if (doc.graph) {
        j["kind"] = "graph";
        j["graph"] = graph_to_json(*doc.graph);
    }
    j["metadata"] = doc.metadata;
    return j;
}

std::string write_instance(const InstanceDocument& doc) { return instance_to_json(doc).dump(2) + "\n"; }

InstanceDocument parse_instance(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    InstanceDocument doc;
    if (first == std::string_view::npos || text[first] != '{') {
        doc.graph = parse_dimacs(text);
        return doc;
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw json_error(text, e);
    }
    if (as<std::string>(field(j, "format"), "format") != kInstanceFormat)
        throw MalformedInput("unknown document format");
    if (as<int>(field(j, "version"), "version") != kVersion) throw MalformedInput("unsupported version");
    const auto kind = as<std::string>(field(j, "kind"), "kind");
    if (kind == "graph") {
        doc.graph = graph_from_json(field(j, "graph"));
    } else if (kind == "balls" || kind == "points") {
        GeometricInstance inst;
        inst.dim = as<int>(field(j, "dim"), "dim");
        if (inst.dim < 1 || inst.dim > kMaxDim) throw MalformedInput("dim must be in 1..4");
        if (kind == "balls") {
            inst.kind = InstanceKind::balls;
            std::size_t i = 0;
            for (const auto& b : field(j, "balls")) {
                inst.balls.push_back({point_from(field(b, "center"), inst.dim, i), as<double>(field(b, "radius"), "radius")});
                ++i;
            }
        } else {
            inst.kind = InstanceKind::points;
            inst.threshold = as<double>(field(j, "threshold"), "threshold");
            std::size_t i = 0;
            for (const auto& p : field(j, "points")) inst.points.push_back(point_from(p, inst.dim, i++));
        }
        if (j.contains("weights")) {
            inst.weights = as<std::vector<double>>(j["weights"], "weights");
            if (inst.weights.size() != inst.size()) throw MalformedInput("weights must have one entry per object");
        }
        inst.validate();
        doc.geometry = std::move(inst);
    } else {
        throw MalformedInput("unknown instance kind '" + kind + "'");
    }
    if (j.contains("metadata")) doc.metadata = j["metadata"];
    return doc;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInput("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

InstanceDocument read_instance_file(const std::string& path) { return parse_instance(read_text_file(path)); }

} // namespace geoclique
