#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "geoclique/geometry.hpp"
#include "geoclique/graph.hpp"

namespace geoclique {

/// Each edge uv (u < v, in edges() order k) becomes the path u - a_k - b_k - v
/// with a_k = n + 2k, b_k = n + 2k + 1. Labels: "v<u>", "a<u>-<v>", "b<u>-<v>".
Graph two_subdivision(const Graph& g);

/// Complement of the 2-subdivision, same ids and labels.
Graph co2subdivision(const Graph& g);

struct EmbeddingConfig {
    /// Pullback of the vertex points (R^4) or unused (balls).
    double epsilon = 0.05;
    /// Perturbation size. In R^4 it tracks epsilon / 1000 while shrinking.
    double epsilon_prime = 0.0;
    /// Radius slack of the vertex balls.
    double epsilon_second = 0.0;
    double margin = kDefaultMargin;
    /// Largest distance between pi(p+(e)) and pi(p-(e')), e != e'.
    double eta = 0.0;
    int max_shrink = 60;
};

struct EmbeddingReport {
    bool graph_equal = false;
    /// Smallest |distance - threshold| over all pairs (+inf with < 2 objects).
    double min_clearance = 0.0;
    std::optional<Edge> tightest_pair;
    /// First pair whose adjacency differs from the target graph.
    std::optional<Edge> mismatch;
    bool size_mismatch = false;
    /// Ball case only: every radius within [1, 1 + target_eps].
    bool radii_ok = true;
    bool pass = false;
    std::string message;
};

struct Embedding {
    GeometricInstance instance;
    EmbeddingConfig config;
    int shrink_steps = 0;
    EmbeddingReport report;
};

/// Checks that `inst` realizes co2subdivision(g) with every pairwise distance
/// at least `cfg.margin` away from its threshold. With `radius_cap` set the
/// radii must also lie in [1, radius_cap].
EmbeddingReport verify_embedding(const GeometricInstance& inst, const Graph& g, const EmbeddingConfig& cfg,
                                 std::optional<double> radius_cap = std::nullopt);

/// Distance between a vertex point and an unperturbed edge point in R^4.
double r4_shared_distance(double epsilon);

/// Unit balls in R^4 whose intersection graph is co2subdivision(g). Halves
/// epsilon until verification passes; throws ConstructionInfeasible after
/// cfg.max_shrink attempts.
Embedding embed_co2subdivision_r4(const Graph& g, EmbeddingConfig cfg = {});

/// Balls in R^3 with radii in [1, 1 + target_eps] realizing co2subdivision(g).
Embedding embed_co2subdivision_eps_balls(const Graph& g, double target_eps, EmbeddingConfig cfg = {});

enum class RandomKind { disks2d, balls3d, points3d, points2d };

std::optional<RandomKind> parse_random_kind(const std::string& name);
std::string to_string(RandomKind kind);

struct RandomInstanceSpec {
    double radius_min = 1.0;
    double radius_max = 1.0;
    /// Centers are uniform in [0, box]^d.
    double box = 4.0;
    /// Point kinds only.
    double threshold = 1.0;
};

/// Reproducible uniform instance: same arguments give the same instance.
GeometricInstance gen_random_instance(RandomKind kind, int n, const RandomInstanceSpec& spec, std::uint64_t seed);

/// G(n, p).
Graph random_graph(int n, double p, std::uint64_t seed);

/// Random bipartite graph: each vertex joins a side with probability 1/2,
/// each cross pair is an edge with probability p.
Graph random_bipartite_graph(int n, double p, std::uint64_t seed);

/// Integer weights uniform in [lo, hi].
Graph with_random_weights(const Graph& g, int lo, int hi, std::uint64_t seed);

} // namespace geoclique
