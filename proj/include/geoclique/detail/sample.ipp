#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "geoclique/errors.hpp"

namespace geoclique {

template <typename Rng>
std::optional<VertexSet> sample_candidate(const Graph& h, std::int64_t s, bool weighted, Rng& rng) {
    const int n = h.n();
    if (s < 0 || s > n) throw PreconditionError("sample_candidate: s exceeds n");
    const auto size = static_cast<std::size_t>(s);
    VertexSet sample;
    if (weighted) {
        // Exponential race: key Exp(1) / w; the s smallest keys form a
        // weight-proportional sample without replacement.
        std::exponential_distribution<double> exp1(1.0);
        std::vector<std::pair<double, Vertex>> keys(n);
        for (Vertex v = 0; v < n; ++v) {
            const double w = h.weight(v);
            const double e = exp1(rng);
            keys[v] = {w > 0 ? e / w : std::numeric_limits<double>::infinity(), v};
        }
        std::partial_sort(keys.begin(), keys.begin() + size, keys.end());
        for (std::size_t i = 0; i < size; ++i) sample.push_back(keys[i].second);
    } else {
        std::vector<Vertex> pool(n);
        std::iota(pool.begin(), pool.end(), 0);
        for (std::size_t i = 0; i < size; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
            std::swap(pool[i], pool[pick(rng)]);
        }
        sample.assign(pool.begin(), pool.begin() + size);
    }
    std::sort(sample.begin(), sample.end());
    if (!is_independent_set(h, sample)) return std::nullopt;
    return sample;
}

} // namespace geoclique
