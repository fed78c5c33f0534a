#include "geoclique/bipartite.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "geoclique/errors.hpp"

namespace geoclique {

int Matching::size() const {
    int matched = 0;
    for (Vertex v : mate)
        if (v >= 0) ++matched;
    return matched / 2;
}

bool Matching::valid_in(const Graph& g) const {
    if (mate.size() != static_cast<std::size_t>(g.n())) return false;
    for (Vertex v = 0; v < g.n(); ++v) {
        Vertex u = mate[v];
        if (u < 0) continue;
        if (u >= g.n() || mate[u] != v || !g.adjacent(u, v)) return false;
    }
    return true;
}

namespace {

void require_proper(const Graph& g, const TwoColoring& coloring) {
    if (!is_proper_coloring(g, coloring))
        throw PreconditionError("bipartite solver: coloring is not a proper 2-coloring of the graph");
}

class HopcroftKarp {
public:
    HopcroftKarp(const Graph& g, const TwoColoring& coloring) : g_(g) {
        mate_.assign(g.n(), -1);
        level_.assign(g.n(), 0);
        for (Vertex v = 0; v < g.n(); ++v)
            if (coloring.side(v) == 0) left_.push_back(v);
    }

    Matching run() {
        while (bfs()) {
            it_.assign(g_.n(), 0);
            for (Vertex u : left_)
                if (mate_[u] < 0) dfs(u);
        }
        return Matching{mate_};
    }

private:
    static constexpr int kInf = std::numeric_limits<int>::max();

    // Layers left vertices by alternating distance from the free left vertices.
    bool bfs() {
        std::vector<Vertex> queue;
        for (Vertex u : left_) {
            if (mate_[u] < 0) {
                level_[u] = 0;
                queue.push_back(u);
            } else {
                level_[u] = kInf;
            }
        }
        bool found = false;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex v : g_.neighbors(u)) {
                Vertex w = mate_[v];
                if (w < 0) {
                    found = true;
                } else if (level_[w] == kInf) {
                    level_[w] = level_[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return found;
    }

    bool dfs(Vertex u) {
        auto nbrs = g_.neighbors(u);
        for (int& i = it_[u]; i < static_cast<int>(nbrs.size()); ++i) {
            Vertex v = nbrs[i];
            Vertex w = mate_[v];
            if (w < 0 || (level_[w] == level_[u] + 1 && dfs(w))) {
                mate_[u] = v;
                mate_[v] = u;
                ++i;
                return true;
            }
        }
        level_[u] = kInf;
        return false;
    }

    const Graph& g_;
    std::vector<Vertex> left_;
    std::vector<Vertex> mate_;
    std::vector<int> level_;
    std::vector<int> it_;
};

template <typename Cap>
class Dinic {
public:
    explicit Dinic(int nodes) : head_(nodes, -1), level_(nodes), it_(nodes) {}

    void add_edge(int from, int to, Cap cap) {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], Cap{0}});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    Cap max_flow(int source, int sink, Cap slack) {
        Cap total{0};
        while (bfs(source, sink, slack)) {
            it_ = head_;
            while (Cap pushed = dfs(source, sink, std::numeric_limits<Cap>::max(), slack)) total += pushed;
        }
        return total;
    }

    /// Nodes reachable from source through arcs with residual capacity.
    std::vector<bool> source_side(int source, Cap slack) const {
        std::vector<bool> seen(head_.size(), false);
        std::vector<int> stack{source};
        seen[source] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int a = head_[u]; a >= 0; a = arcs_[a].next)
                if (arcs_[a].cap > slack && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = true;
                    stack.push_back(arcs_[a].to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int next;
        Cap cap;
    };

    bool bfs(int source, int sink, Cap slack) {
        std::fill(level_.begin(), level_.end(), -1);
        std::vector<int> queue{source};
        level_[source] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (int a = head_[u]; a >= 0; a = arcs_[a].next)
                if (arcs_[a].cap > slack && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[u] + 1;
                    queue.push_back(arcs_[a].to);
                }
        }
        return level_[sink] >= 0;
    }

    Cap dfs(int u, int sink, Cap limit, Cap slack) {
        if (u == sink) return limit;
        for (int& a = it_[u]; a >= 0; a = arcs_[a].next) {
            Arc& arc = arcs_[a];
            if (arc.cap > slack && level_[arc.to] == level_[u] + 1) {
                Cap pushed = dfs(arc.to, sink, std::min(limit, arc.cap), slack);
                if (pushed > slack) {
                    arc.cap -= pushed;
                    arcs_[a ^ 1].cap += pushed;
                    return pushed;
                }
            }
        }
        return Cap{0};
    }

    std::vector<Arc> arcs_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> it_;
};

template <typename Cap>
VertexSet min_cut_mwis(const Graph& g, const TwoColoring& coloring, Cap slack) {
    const int n = g.n();
    const int source = n;
    const int sink = n + 1;
    Dinic<Cap> flow(n + 2);
    const Cap infinite = std::numeric_limits<Cap>::max() / 4;
    for (Vertex v = 0; v < n; ++v) {
        const Cap w = static_cast<Cap>(g.weight(v));
        if (coloring.side(v) == 0) {
            flow.add_edge(source, v, w);
            for (Vertex u : g.neighbors(v)) flow.add_edge(v, u, infinite);
        } else {
            flow.add_edge(v, sink, w);
        }
    }
    flow.max_flow(source, sink, slack);
    const auto reach = flow.source_side(source, slack);
    VertexSet out;
    for (Vertex v = 0; v < n; ++v) {
        const bool keep = coloring.side(v) == 0 ? reach[v] : !reach[v];
        if (keep) out.push_back(v);
    }
    return out;
}

} // namespace

Matching max_matching(const Graph& g, const TwoColoring& coloring) {
    require_proper(g, coloring);
    return HopcroftKarp(g, coloring).run();
}

VertexSet max_independent_set_bipartite(const Graph& g, const TwoColoring& coloring) {
    const Matching matching = max_matching(g, coloring);
    const int n = g.n();
    std::vector<bool> reached(n, false);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v)
        if (coloring.side(v) == 0 && matching.mate[v] < 0) {
            reached[v] = true;
            queue.push_back(v);
        }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        // u is on side 0: leave through non-matching edges, return through the matching.
        for (Vertex v : g.neighbors(u)) {
            if (reached[v] || matching.mate[u] == v) continue;
            reached[v] = true;
            Vertex w = matching.mate[v];
            if (w >= 0 && !reached[w]) {
                reached[w] = true;
                queue.push_back(w);
            }
        }
    }
    VertexSet out;
    for (Vertex v = 0; v < n; ++v) {
        const bool keep = coloring.side(v) == 0 ? reached[v] : !reached[v];
        if (keep) out.push_back(v);
    }
    if (!is_independent_set(g, out) || static_cast<int>(out.size()) != n - matching.size())
        throw std::logic_error("Koenig extraction produced an invalid independent set");
    return out;
}

VertexSet max_weight_independent_set_bipartite(const Graph& g, const TwoColoring& coloring) {
    require_proper(g, coloring);
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.weight(v) < 0) throw PreconditionError("negative vertex weight");
    VertexSet out = g.integral_weights() ? min_cut_mwis<std::int64_t>(g, coloring, 0)
                                         : min_cut_mwis<double>(g, coloring, 1e-9);
    if (!is_independent_set(g, out)) throw std::logic_error("min-cut extraction produced a dependent set");
    return out;
}

VertexSet solve_bipartite_mis(const Graph& g, const TwoColoring& coloring) {
    return g.weighted() ? max_weight_independent_set_bipartite(g, coloring)
                        : max_independent_set_bipartite(g, coloring);
}

} // namespace geoclique
