#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace geoclique {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbors are kept as sorted lists for iteration. Graphs up to
/// `kBitsetThreshold` vertices also carry one adjacency bitset per vertex so
/// that `adjacent()` is a single word lookup; larger graphs fall back to a
/// binary search in the neighbor list.
///
/// Optional per-vertex weights (finite, >= 0; unit when absent) and string
/// labels travel with the graph through complement and induced subgraphs.
class Graph {
public:
    static constexpr int kBitsetThreshold = 4096;

    Graph() = default;

    /// Builds from an edge list. Duplicate edges (in either orientation) are
    /// merged. Throws MalformedInput on self-loops or out-of-range endpoints.
    static Graph from_edge_list(int n, std::span<const Edge> edges);
    static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int n() const noexcept { return static_cast<int>(neighbors_.size()); }
    std::size_t m() const noexcept { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    bool has_bitsets() const noexcept { return words_ > 0; }
    /// Adjacency row of v as 64-bit words; empty when bitsets are disabled.
    std::span<const std::uint64_t> row(Vertex v) const;

    bool weighted() const noexcept { return !weights_.empty(); }
    double weight(Vertex v) const { return weights_.empty() ? 1.0 : weights_[v]; }
    std::span<const double> weights() const noexcept { return weights_; }
    /// True when every weight is a nonnegative integer below 2^53 (unit
    /// weights included); such graphs take the exact integer flow path.
    bool integral_weights() const;
    double total_weight() const;
    double weight_of(std::span<const Vertex> set) const;

    /// Returns a copy with the given weights (size n, finite, >= 0).
    Graph with_weights(std::vector<double> weights) const;
    Graph without_weights() const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::string& label(Vertex v) const { return labels_[v]; }
    Graph with_labels(std::vector<std::string> labels) const;

    /// Every edge (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const;

private:
    void build_bitsets();

    std::vector<std::vector<Vertex>> neighbors_;
    std::vector<std::uint64_t> bits_;
    std::size_t words_ = 0;
    std::size_t m_ = 0;
    std::vector<double> weights_;
    std::vector<std::string> labels_;
};

/// Proper 2-coloring, one entry in {0, 1} per vertex.
struct TwoColoring {
    std::vector<std::uint8_t> color;

    int side(Vertex v) const { return color[v]; }
    std::size_t size() const { return color.size(); }
};

struct InducedSubgraph {
    Graph graph;
    /// to_parent[i] is the id in the parent graph of subgraph vertex i.
    std::vector<Vertex> to_parent;

    VertexSet lift(std::span<const Vertex> local) const;
};

/// Result of a multi-source BFS. `layers[k-1]` holds the vertices at distance
/// exactly k from the source; `distance` is 0 on the source and -1 on
/// unreached vertices.
struct BfsLayers {
    std::vector<VertexSet> layers;
    VertexSet unreached;
    std::vector<int> distance;

    int last_index() const { return static_cast<int>(layers.size()); }
};

Graph complement(const Graph& g);

/// Returns a proper 2-coloring or nullopt when g has an odd cycle. Each
/// component's smallest vertex gets color 0.
std::optional<TwoColoring> bipartite_2coloring(const Graph& g);

bool is_proper_coloring(const Graph& g, const TwoColoring& coloring);

/// Multi-source BFS layering. Throws PreconditionError on an empty source.
BfsLayers bfs_layers(const Graph& g, std::span<const Vertex> source);

/// Vertex of minimum degree, smallest id on ties. Throws on n == 0.
Vertex min_degree_vertex(const Graph& g);

/// Subgraph induced by `s` (any order, duplicates ignored), relabeled densely
/// in increasing parent-id order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// All vertices of g not in `removed`.
VertexSet vertices_except(const Graph& g, std::span<const Vertex> removed);

/// N[s]: s together with every neighbor of s.
VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> s);

bool is_independent_set(const Graph& g, std::span<const Vertex> s);
bool is_clique(const Graph& g, std::span<const Vertex> s);

/// Greedy independent set repeatedly taking a minimum-degree vertex of the
/// remaining graph (ties to the smallest id).
VertexSet greedy_independent_set(const Graph& g);

VertexSet normalized(VertexSet s);

} // namespace geoclique
