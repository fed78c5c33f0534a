#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "geoclique/graph.hpp"

namespace geoclique::fixtures {

inline Graph cycle(int k) {
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph::from_edge_list(k, e);
}

inline Graph path(int k) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(k, e);
}

inline Graph complete(int k) {
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return Graph::from_edge_list(k, e);
}

/// Disjoint union with no edges between the parts.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    auto e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
    return Graph::from_edge_list(a.n() + b.n(), e);
}

/// Every vertex of a joined to every vertex of b.
inline Graph join(const Graph& a, const Graph& b) {
    auto e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) e.emplace_back(u, a.n() + v);
    return Graph::from_edge_list(a.n() + b.n(), e);
}

/// An odd cycle (3, 5 or 7) with a few extra vertices hanging off it, at most
/// `max_n` vertices in total.
inline Graph odd_structure(std::mt19937_64& rng, int max_n = 7) {
    const int k = 3 + 2 * static_cast<int>(rng() % 3);
    const int room = std::max(0, max_n - k);
    const int extra = room > 0 ? static_cast<int>(rng() % (room + 1)) : 0;
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    for (int j = 0; j < extra; ++j) {
        const int v = k + j;
        const int a = static_cast<int>(rng() % (k + j));
        e.emplace_back(a, v);
        if (rng() % 2) {
            const int b = static_cast<int>(rng() % (k + j));
            if (b != a) e.emplace_back(b, v);
        }
    }
    return Graph::from_edge_list(k + extra, e);
}

/// A long odd cycle (27..33) with pendant paths, a few vertices adjacent to
/// two cycle vertices at distance 2, and isolated vertices. Its only odd
/// cycles all have the cycle's length, so the induced odd cycle packing
/// number is 1.
inline Graph long_cycle_graph(std::uint64_t seed, int* girth = nullptr) {
    std::mt19937_64 rng(seed);
    const int g = 27 + 2 * static_cast<int>(rng() % 4);
    std::vector<Edge> e;
    int n = g;
    for (int i = 0; i < g; ++i) e.emplace_back(i, (i + 1) % g);
    const int trees = 3 + static_cast<int>(rng() % 5);
    for (int t = 0; t < trees; ++t) {
        int prev = static_cast<int>(rng() % g);
        const int depth = 1 + static_cast<int>(rng() % 5);
        for (int d = 0; d < depth; ++d) {
            e.emplace_back(prev, n);
            prev = n++;
        }
    }
    const int diamonds = static_cast<int>(rng() % 3);
    for (int k = 0; k < diamonds; ++k) {
        const int at = static_cast<int>(rng() % g);
        e.emplace_back(at, n);
        e.emplace_back((at + 2) % g, n);
        ++n;
    }
    n += 10 + static_cast<int>(rng() % 20);
    if (girth) *girth = g;
    return Graph::from_edge_list(n, e);
}

} // namespace geoclique::fixtures
