#include "geoclique/oddcycle.hpp"
#include "geoclique/errors.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

namespace geoclique {

namespace {

constexpr int kNone = std::numeric_limits<int>::max();

// BFS over (vertex, parity) states from (start, 0). State id = 2 * v + parity.
// Returns the length of the shortest odd closed walk through `start`, giving
// up once the depth exceeds `cutoff`.
struct CoverSearch {
    std::vector<int> dist;
    std::vector<int> parent;
    std::vector<int> queue;

    int run(const Graph& g, Vertex start, int cutoff, bool keep_parents) {
        const int states = 2 * g.n();
        dist.assign(states, -1);
        if (keep_parents) parent.assign(states, -1);
        queue.clear();
        const int origin = 2 * start;
        const int target = 2 * start + 1;
        dist[origin] = 0;
        queue.push_back(origin);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int state = queue[head];
            const int d = dist[state];
            if (d + 1 > cutoff) break;
            const Vertex u = state >> 1;
            const int flip = (state & 1) ^ 1;
            for (Vertex v : g.neighbors(u)) {
                const int next = 2 * v + flip;
                if (dist[next] >= 0) continue;
                dist[next] = d + 1;
                if (keep_parents) parent[next] = state;
                if (next == target) return d + 1;
                queue.push_back(next);
            }
        }
        return kNone;
    }
};

struct Best {
    int length = kNone;
    Vertex start = -1;
};

Best search_all(const Graph& g, Exec exec) {
    const int n = g.n();
    std::vector<int> per_start(n, kNone);
    if (exec == Exec::parallel) {
        std::atomic<int> bound{kNone};
#pragma omp parallel
        {
            CoverSearch search;
#pragma omp for schedule(dynamic, 4)
            for (int v = 0; v < n; ++v) {
                // Starts that cannot tie the current bound are cut short; ties
                // still complete, so the (length, start) minimum is unchanged.
                const int len = search.run(g, v, bound.load(std::memory_order_relaxed), false);
                per_start[v] = len;
                int seen = bound.load(std::memory_order_relaxed);
                while (len < seen && !bound.compare_exchange_weak(seen, len, std::memory_order_relaxed)) {
                }
            }
        }
    } else {
        CoverSearch search;
        int bound = kNone;
        for (int v = 0; v < n; ++v) {
            per_start[v] = search.run(g, v, bound, false);
            bound = std::min(bound, per_start[v]);
        }
    }
    Best best;
    for (int v = 0; v < n; ++v)
        if (per_start[v] < best.length) best = {per_start[v], v};
    return best;
}

} // namespace

OddCycle reduce_odd_walk(std::vector<Vertex> walk) {
    if (walk.size() % 2 == 0) throw PreconditionError("reduce_odd_walk: walk has even length");
    for (;;) {
        const std::size_t len = walk.size();
        bool changed = false;
        for (std::size_t i = 0; i < len && !changed; ++i)
            for (std::size_t j = i + 1; j < len && !changed; ++j) {
                if (walk[i] != walk[j]) continue;
                // Split at the repeat into walk[i..j) and the rest; keep the odd part.
                std::vector<Vertex> inner(walk.begin() + i, walk.begin() + j);
                std::vector<Vertex> outer(walk.begin(), walk.begin() + i);
                outer.insert(outer.end(), walk.begin() + j, walk.end());
                walk = inner.size() % 2 == 1 ? std::move(inner) : std::move(outer);
                changed = true;
            }
        if (!changed) break;
    }
    return OddCycle{std::move(walk)};
}

std::optional<int> odd_girth(const Graph& g, Exec exec) {
    const Best best = search_all(g, exec);
    if (best.start < 0) return std::nullopt;
    return best.length;
}

std::optional<OddCycle> shortest_odd_cycle(const Graph& g, Exec exec) {
    const Best best = search_all(g, exec);
    if (best.start < 0) return std::nullopt;

    CoverSearch search;
    const int len = search.run(g, best.start, best.length, true);
    if (len != best.length) throw std::logic_error("shortest_odd_cycle: replay mismatch");
    std::vector<Vertex> walk;
    for (int state = 2 * best.start + 1; state != 2 * best.start; state = search.parent[state])
        walk.push_back(state >> 1);
    std::reverse(walk.begin(), walk.end());
    // walk now ends at start and excludes the initial copy; rotate so it begins there.
    std::rotate(walk.begin(), walk.end() - 1, walk.end());

    OddCycle cycle = reduce_odd_walk(std::move(walk));
    if (cycle.length() != best.length || !assert_valid_cycle(g, cycle))
        throw std::logic_error("shortest_odd_cycle: extracted walk is not a chordless odd cycle");
    return cycle;
}

bool assert_valid_cycle(const Graph& g, const OddCycle& c, bool require_chordless) {
    const int len = c.length();
    if (len < 3 || len % 2 == 0) return false;
    for (Vertex v : c.vertices)
        if (v < 0 || v >= g.n()) return false;
    VertexSet sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int i = 0; i < len; ++i)
        if (!g.adjacent(c.vertices[i], c.vertices[(i + 1) % len])) return false;
    if (require_chordless) {
        for (int i = 0; i < len; ++i)
            for (int j = i + 2; j < len; ++j) {
                if (i == 0 && j == len - 1) continue;
                if (g.adjacent(c.vertices[i], c.vertices[j])) return false;
            }
    }
    return true;
}

} // namespace geoclique
