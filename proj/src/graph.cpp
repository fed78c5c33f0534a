#include "geoclique/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <numeric>

#include "geoclique/errors.hpp"

namespace geoclique {

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
    if (n < 0) throw MalformedInput("negative vertex count");
    Graph g;
    g.neighbors_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw MalformedInput("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                 std::to_string(v) + ") with n = " + std::to_string(n));
        if (u == v) throw MalformedInput("self-loop at vertex " + std::to_string(u));
        g.neighbors_[u].push_back(v);
        g.neighbors_[v].push_back(u);
    }
    for (auto& list : g.neighbors_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.m_ += list.size();
    }
    g.m_ /= 2;
    g.build_bitsets();
    return g;
}

void Graph::build_bitsets() {
    const int count = n();
    if (count == 0 || count > kBitsetThreshold) {
        words_ = 0;
        bits_.clear();
        return;
    }
    words_ = (static_cast<std::size_t>(count) + 63) / 64;
    bits_.assign(words_ * static_cast<std::size_t>(count), 0);
    for (Vertex v = 0; v < count; ++v)
        for (Vertex u : neighbors_[v]) bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (words_ > 0) return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
    const auto& list = neighbors_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
    if (words_ == 0) return {};
    return {bits_.data() + v * words_, words_};
}

bool Graph::integral_weights() const {
    constexpr double kLimit = 9007199254740992.0; // 2^53
    return std::all_of(weights_.begin(), weights_.end(),
                       [](double w) { return w == std::floor(w) && w < kLimit; });
}

double Graph::total_weight() const {
    if (weights_.empty()) return n();
    return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

double Graph::weight_of(std::span<const Vertex> set) const {
    if (weights_.empty()) return static_cast<double>(set.size());
    double total = 0.0;
    for (Vertex v : set) total += weights_[v];
    return total;
}

Graph Graph::with_weights(std::vector<double> weights) const {
    if (weights.size() != neighbors_.size())
        throw MalformedInput("weight vector has " + std::to_string(weights.size()) +
                             " entries for " + std::to_string(n()) + " vertices");
    for (double w : weights)
        if (!std::isfinite(w) || w < 0.0) throw MalformedInput("weights must be finite and >= 0");
    Graph copy = *this;
    copy.weights_ = std::move(weights);
    return copy;
}

Graph Graph::without_weights() const {
    Graph copy = *this;
    copy.weights_.clear();
    return copy;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (labels.size() != neighbors_.size()) throw MalformedInput("label count does not match n");
    Graph copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : neighbors_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return neighbors_ == other.neighbors_ && weights_ == other.weights_ && labels_ == other.labels_;
}

VertexSet InducedSubgraph::lift(std::span<const Vertex> local) const {
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_parent[v]);
    std::sort(out.begin(), out.end());
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.n();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 - g.m());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    Graph h = Graph::from_edge_list(n, edges);
    if (g.weighted()) h = h.with_weights({g.weights().begin(), g.weights().end()});
    if (g.has_labels()) {
        std::vector<std::string> labels;
        for (Vertex v = 0; v < n; ++v) labels.push_back(g.label(v));
        h = h.with_labels(std::move(labels));
    }
    return h;
}

std::optional<TwoColoring> bipartite_2coloring(const Graph& g) {
    const int n = g.n();
    TwoColoring coloring;
    coloring.color.assign(n, 2);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex root = 0; root < n; ++root) {
        if (coloring.color[root] != 2) continue;
        coloring.color[root] = 0;
        queue.clear();
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex v : g.neighbors(u)) {
                if (coloring.color[v] == 2) {
                    coloring.color[v] = coloring.color[u] ^ 1;
                    queue.push_back(v);
                } else if (coloring.color[v] == coloring.color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return coloring;
}

bool is_proper_coloring(const Graph& g, const TwoColoring& coloring) {
    if (coloring.size() != static_cast<std::size_t>(g.n())) return false;
    for (Vertex u = 0; u < g.n(); ++u) {
        if (coloring.color[u] > 1) return false;
        for (Vertex v : g.neighbors(u))
            if (coloring.color[u] == coloring.color[v]) return false;
    }
    return true;
}

BfsLayers bfs_layers(const Graph& g, std::span<const Vertex> source) {
    if (source.empty()) throw PreconditionError("bfs_layers: empty source set");
    BfsLayers out;
    out.distance.assign(g.n(), -1);
    VertexSet frontier;
    for (Vertex v : source) {
        if (v < 0 || v >= g.n()) throw PreconditionError("bfs_layers: source vertex out of range");
        if (out.distance[v] != 0) {
            out.distance[v] = 0;
            frontier.push_back(v);
        }
    }
    for (int depth = 1; !frontier.empty(); ++depth) {
        VertexSet next;
        for (Vertex u : frontier)
            for (Vertex v : g.neighbors(u))
                if (out.distance[v] < 0) {
                    out.distance[v] = depth;
                    next.push_back(v);
                }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        out.layers.push_back(next);
        frontier = std::move(next);
    }
    for (Vertex v = 0; v < g.n(); ++v)
        if (out.distance[v] < 0) out.unreached.push_back(v);
    return out;
}

Vertex min_degree_vertex(const Graph& g) {
    if (g.n() == 0) throw PreconditionError("min_degree_vertex: empty graph");
    Vertex best = 0;
    for (Vertex v = 1; v < g.n(); ++v)
        if (g.degree(v) < g.degree(best)) best = v;
    return best;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    InducedSubgraph out;
    out.to_parent.assign(s.begin(), s.end());
    std::sort(out.to_parent.begin(), out.to_parent.end());
    out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()), out.to_parent.end());
    for (Vertex v : out.to_parent)
        if (v < 0 || v >= g.n())
            throw PreconditionError("induced_subgraph: vertex " + std::to_string(v) + " out of range");

    const int k = static_cast<int>(out.to_parent.size());
    std::vector<Vertex> local(g.n(), -1);
    for (int i = 0; i < k; ++i) local[out.to_parent[i]] = i;

    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (Vertex u : g.neighbors(out.to_parent[i]))
            if (local[u] > i) edges.emplace_back(i, local[u]);
    out.graph = Graph::from_edge_list(k, edges);
    if (g.weighted()) {
        std::vector<double> w(k);
        for (int i = 0; i < k; ++i) w[i] = g.weight(out.to_parent[i]);
        out.graph = out.graph.with_weights(std::move(w));
    }
    if (g.has_labels()) {
        std::vector<std::string> labels(k);
        for (int i = 0; i < k; ++i) labels[i] = g.label(out.to_parent[i]);
        out.graph = out.graph.with_labels(std::move(labels));
    }
    return out;
}

VertexSet vertices_except(const Graph& g, std::span<const Vertex> removed) {
    std::vector<bool> drop(g.n(), false);
    for (Vertex v : removed) drop[v] = true;
    VertexSet out;
    for (Vertex v = 0; v < g.n(); ++v)
        if (!drop[v]) out.push_back(v);
    return out;
}

VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> s) {
    std::vector<bool> mark(g.n(), false);
    for (Vertex v : s) {
        mark[v] = true;
        for (Vertex u : g.neighbors(v)) mark[u] = true;
    }
    VertexSet out;
    for (Vertex v = 0; v < g.n(); ++v)
        if (mark[v]) out.push_back(v);
    return out;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.n()) return false;
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
    }
    return true;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.n()) return false;
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || !g.adjacent(s[i], s[j])) return false;
    }
    return true;
}

VertexSet greedy_independent_set(const Graph& g) {
    const int n = g.n();
    std::vector<bool> alive(n, true);
    std::vector<int> degree(n);
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
    VertexSet out;
    for (int remaining = n; remaining > 0;) {
        Vertex best = -1;
        double best_score = -1.0;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            double score = g.weight(v) / (degree[v] + 1.0);
            if (score > best_score) {
                best = v;
                best_score = score;
            }
        }
        out.push_back(best);
        std::vector<Vertex> removed{best};
        for (Vertex u : g.neighbors(best))
            if (alive[u]) removed.push_back(u);
        for (Vertex r : removed) {
            alive[r] = false;
            --remaining;
            for (Vertex x : g.neighbors(r))
                if (alive[x]) --degree[x];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

} // namespace geoclique
