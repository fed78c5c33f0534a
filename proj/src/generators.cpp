#include "geoclique/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "geoclique/errors.hpp"

namespace geoclique {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

// Angle of pi(p+(e_k)), k = 1..m, on the upper half of the unit circle.
double edge_angle(int k, int m) { return kPi / 4.0 + k * (kPi / 2.0) / (m + 1); }

double vertex_angle(int i, int n) { return n == 1 ? kPi / 2.0 : kPi / 3.0 + i * (kPi / 3.0) / (n - 1); }

double projected_eta(int m) {
    double eta = 0.0;
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k) {
            if (j == k) continue;
            const double a = edge_angle(j, m);
            const double b = edge_angle(k, m) + kPi;
            eta = std::max(eta, std::hypot(std::cos(a) - std::cos(b), std::sin(a) - std::sin(b)));
        }
    return eta;
}

GeometricInstance build_r4(const Graph& g, const std::vector<Edge>& edges, double eps, double eps1) {
    const int n = g.n();
    const int m = static_cast<int>(edges.size());
    std::vector<Ball> balls;
    std::vector<std::array<double, 2>> dir(n);
    for (int i = 0; i < n; ++i) {
        const double phi = vertex_angle(i, n);
        dir[i] = {std::cos(phi), std::sin(phi)};
        balls.push_back({Point{0.0, 0.0, (kSqrt3 - eps) * dir[i][0], (kSqrt3 - eps) * dir[i][1]}, 1.0});
    }
    const double push = eps + eps1;
    for (int k = 0; k < m; ++k) {
        const auto [u, v] = edges[k];
        const double theta = edge_angle(k + 1, m);
        const double x = std::cos(theta);
        const double y = std::sin(theta);
        balls.push_back({Point{x, y, -push * dir[u][0], -push * dir[u][1]}, 1.0});
        balls.push_back({Point{-x, -y, -push * dir[v][0], -push * dir[v][1]}, 1.0});
    }
    return GeometricInstance::from_balls(4, std::move(balls));
}

GeometricInstance build_balls(const Graph& g, const std::vector<Edge>& edges, double eps1, double eps2) {
    const int n = g.n();
    const int m = static_cast<int>(edges.size());
    std::vector<long double> height(n);
    std::vector<long double> radius(n);
    std::vector<Ball> balls;
    for (int i = 0; i < n; ++i) {
        height[i] = kSqrt3 + static_cast<long double>(i + 1) * eps1;
        radius[i] = std::sqrt(1.0L + height[i] * height[i]) - 1.0L + eps2;
        balls.push_back({Point{0.0, 0.0, static_cast<double>(height[i])}, static_cast<double>(radius[i])});
    }
    // Push the unit ball at angle theta straight away from the center of
    // vertex ball `owner`, to the middle of the window where it leaves that
    // ball but still meets every other vertex ball.
    auto pushed = [&](double theta, Vertex owner) {
        const long double c[3] = {std::cos(static_cast<long double>(theta)), std::sin(static_cast<long double>(theta)),
                                  0.0L};
        long double d[3] = {c[0], c[1], -height[owner]};
        const long double len = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
        for (auto& x : d) x /= len;
        long double hi = std::numeric_limits<long double>::infinity();
        for (int k = 0; k < n; ++k) {
            if (k == owner) continue;
            const long double w[3] = {c[0], c[1], -height[k]};
            const long double b = d[0] * w[0] + d[1] * w[1] + d[2] * w[2];
            const long double reach = radius[k] + 1.0L;
            const long double cc = w[0] * w[0] + w[1] * w[1] + w[2] * w[2] - reach * reach;
            hi = std::min(hi, -b + std::sqrt(b * b - cc));
        }
        const long double lo = eps2;
        const long double delta = std::isinf(hi) ? 2.0L * lo : (lo + hi) / 2.0L;
        return Ball{Point{static_cast<double>(c[0] + delta * d[0]), static_cast<double>(c[1] + delta * d[1]),
                          static_cast<double>(c[2] + delta * d[2])},
                    1.0};
    };
    for (int k = 0; k < m; ++k) {
        const auto [u, v] = edges[k];
        const double theta = edge_angle(k + 1, m);
        balls.push_back(pushed(theta, u));
        balls.push_back(pushed(theta + kPi, v));
    }
    return GeometricInstance::from_balls(3, std::move(balls));
}

} // namespace

Graph two_subdivision(const Graph& g) {
    const int n = g.n();
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::vector<Edge> out;
    std::vector<std::string> labels;
    for (Vertex v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
    for (int k = 0; k < m; ++k) {
        const auto [u, v] = edges[k];
        const Vertex a = n + 2 * k;
        const Vertex b = a + 1;
        out.insert(out.end(), {{u, a}, {a, b}, {b, v}});
        const std::string tag = std::to_string(u) + "-" + std::to_string(v);
        labels.push_back("a" + tag);
        labels.push_back("b" + tag);
    }
    return Graph::from_edge_list(n + 2 * m, out).with_labels(std::move(labels));
}

Graph co2subdivision(const Graph& g) { return complement(two_subdivision(g)); }

double r4_shared_distance(double epsilon) { return std::sqrt(4.0 - 2.0 * kSqrt3 * epsilon + epsilon * epsilon); }

EmbeddingReport verify_embedding(const GeometricInstance& inst, const Graph& g, const EmbeddingConfig& cfg,
                                 std::optional<double> radius_cap) {
    EmbeddingReport r;
    const std::size_t expected = static_cast<std::size_t>(g.n()) + 2 * g.m();
    if (inst.size() != expected) {
        r.size_mismatch = true;
        r.message = "instance has " + std::to_string(inst.size()) + " objects, co-2-subdivision has " +
                    std::to_string(expected) + " vertices";
        return r;
    }
    const Graph target = co2subdivision(g);
    const Graph got = intersection_graph(inst, cfg.margin, Exec::serial).graph;
    r.min_clearance = std::numeric_limits<double>::infinity();
    const int n = target.n();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (!r.mismatch && got.adjacent(u, v) != target.adjacent(u, v)) r.mismatch = Edge{u, v};
            const double gap = std::abs(distance(inst.center(u), inst.center(v)) - inst.pair_threshold(u, v));
            if (gap < r.min_clearance) {
                r.min_clearance = gap;
                r.tightest_pair = Edge{u, v};
            }
        }
    r.graph_equal = !r.mismatch;
    if (radius_cap && inst.kind == InstanceKind::balls)
        for (const auto& b : inst.balls)
            if (b.radius < 1.0 || b.radius > *radius_cap) r.radii_ok = false;
    r.pass = r.graph_equal && r.min_clearance >= cfg.margin && r.radii_ok;
    auto name = [&](Vertex v) { return target.has_labels() ? target.label(v) : std::to_string(v); };
    if (r.mismatch) {
        const auto [u, v] = *r.mismatch;
        r.message = "pair (" + name(u) + ", " + name(v) + ") should be " +
                    (target.adjacent(u, v) ? "adjacent" : "non-adjacent");
    } else if (r.tightest_pair && r.min_clearance < cfg.margin) {
        const auto [u, v] = *r.tightest_pair;
        r.message = "pair (" + name(u) + ", " + name(v) + ") clears its threshold by only " +
                    std::to_string(r.min_clearance);
    } else if (!r.radii_ok) {
        r.message = "radius outside [1, " + std::to_string(*radius_cap) + "]";
    } else {
        r.message = "ok";
    }
    return r;
}

Embedding embed_co2subdivision_r4(const Graph& g, EmbeddingConfig cfg) {
    const auto edges = g.edges();
    cfg.eta = projected_eta(static_cast<int>(edges.size()));
    Embedding out;
    for (int step = 0; step <= cfg.max_shrink; ++step) {
        cfg.epsilon_prime = cfg.epsilon / 1000.0;
        out.instance = build_r4(g, edges, cfg.epsilon, cfg.epsilon_prime);
        out.report = verify_embedding(out.instance, g, cfg);
        out.shrink_steps = step;
        if (out.report.pass) {
            out.config = cfg;
            return out;
        }
        cfg.epsilon /= 2.0;
    }
    throw ConstructionInfeasible("R^4 embedding did not verify after " + std::to_string(cfg.max_shrink) +
                                 " halvings: " + out.report.message);
}

Embedding embed_co2subdivision_eps_balls(const Graph& g, double target_eps, EmbeddingConfig cfg) {
    if (!(target_eps > 0.0)) throw PreconditionError("embed_co2subdivision_eps_balls: target_eps must be positive");
    const auto edges = g.edges();
    cfg.eta = projected_eta(static_cast<int>(edges.size()));
    // Outward pushes of about eps'' must keep anti-matched projections below
    // 2; whatever radius budget remains goes to the height spacing eps'.
    if (cfg.epsilon_second <= 0.0)
        cfg.epsilon_second = std::min(target_eps / 3.0, 0.8 * (2.0 - (edges.size() > 1 ? cfg.eta : 0.0)));
    if (cfg.epsilon_prime <= 0.0) {
        const double top = 2.0 + 0.99 * (target_eps - cfg.epsilon_second);
        cfg.epsilon_prime = (std::sqrt(top * top - 1.0) - kSqrt3) / std::max(1, g.n());
    }
    const double cap = 1.0 + target_eps;
    Embedding out;
    for (int step = 0; step <= cfg.max_shrink; ++step) {
        out.instance = build_balls(g, edges, cfg.epsilon_prime, cfg.epsilon_second);
        out.report = verify_embedding(out.instance, g, cfg, cap);
        out.shrink_steps = step;
        if (out.report.pass) {
            out.config = cfg;
            return out;
        }
        if (!out.report.radii_ok)
            cfg.epsilon_prime /= 2.0;
        else
            cfg.epsilon_second /= 2.0;
    }
    throw ConstructionInfeasible("ball embedding did not verify after " + std::to_string(cfg.max_shrink) +
                                 " halvings: " + out.report.message);
}

std::optional<RandomKind> parse_random_kind(const std::string& name) {
    if (name == "disks2d") return RandomKind::disks2d;
    if (name == "balls3d") return RandomKind::balls3d;
    if (name == "points3d") return RandomKind::points3d;
    if (name == "points2d") return RandomKind::points2d;
    return std::nullopt;
}

std::string to_string(RandomKind kind) {
    switch (kind) {
    case RandomKind::disks2d: return "disks2d";
    case RandomKind::balls3d: return "balls3d";
    case RandomKind::points3d: return "points3d";
    case RandomKind::points2d: return "points2d";
    }
    return "unknown";
}

GeometricInstance gen_random_instance(RandomKind kind, int n, const RandomInstanceSpec& spec, std::uint64_t seed) {
    if (n < 0) throw PreconditionError("gen_random_instance: n must be non-negative");
    if (!(spec.box > 0.0)) throw PreconditionError("gen_random_instance: box must be positive");
    const bool points = kind == RandomKind::points2d || kind == RandomKind::points3d;
    if (points && !(spec.threshold > 0.0)) throw PreconditionError("gen_random_instance: threshold must be positive");
    if (!points && !(spec.radius_min > 0.0 && spec.radius_min <= spec.radius_max))
        throw PreconditionError("gen_random_instance: need 0 < radius_min <= radius_max");
    const int dim = kind == RandomKind::disks2d || kind == RandomKind::points2d ? 2 : 3;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, spec.box);
    std::uniform_real_distribution<double> rad(spec.radius_min, spec.radius_max);
    auto draw = [&] {
        Point p = Point::of_dim(dim);
        for (int i = 0; i < dim; ++i) p[i] = coord(rng);
        return p;
    };
    if (points) {
        std::vector<Point> pts;
        for (int i = 0; i < n; ++i) pts.push_back(draw());
        return GeometricInstance::from_points(dim, std::move(pts), spec.threshold);
    }
    std::vector<Ball> balls;
    for (int i = 0; i < n; ++i) {
        Point c = draw();
        const double r = spec.radius_min == spec.radius_max ? spec.radius_min : rad(rng);
        balls.push_back({c, r});
    }
    return GeometricInstance::from_balls(dim, std::move(balls));
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph random_bipartite_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution half(0.5);
    std::bernoulli_distribution coin(p);
    std::vector<int> side(n);
    for (auto& s : side) s = half(rng) ? 1 : 0;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (side[u] != side[v] && coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph with_random_weights(const Graph& g, int lo, int hi, std::uint64_t seed) {
    if (lo > hi) throw PreconditionError("with_random_weights: lo > hi");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(lo, hi);
    std::vector<double> w(g.n());
    for (auto& x : w) x = pick(rng);
    return g.with_weights(std::move(w));
}

} // namespace geoclique
