#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geoclique/graph.hpp"
#include "geoclique/oddcycle.hpp"
#include "geoclique/parallel.hpp"

namespace geoclique {

enum class EptasMode {
    /// Constants exactly as derived for the (1 - eps) guarantee. Almost always
    /// lands in the small-instance exact branch; refuses above 30 vertices.
    faithful,
    /// Sample size and iteration count capped (s <= max(1, n/4), t <= 1000 by
    /// default); every structural threshold (c, z, layer window) unchanged.
    practical,
};

struct EptasParams {
    double epsilon = 0.2;
    double beta = 1.0;
    int d = 4;
    /// Bound on the induced odd cycle packing number of the input.
    int iocp = 1;
    EptasMode mode = EptasMode::practical;
    double failure_prob = 1e-10;
    std::uint64_t seed = 0;
    /// Practical-mode caps. An unset s_cap means max(1, floor(n / 4)).
    std::optional<std::int64_t> s_cap;
    std::int64_t t_cap = 1000;
    /// Robust mode falls back when a promised-bipartite part is not bipartite;
    /// strict mode throws AssumptionViolation instead.
    bool robust = true;
    /// Largest graph the small-instance exact branch will brute-force.
    int exact_limit = 30;
    /// Largest faithful-mode iteration count that will be attempted.
    double max_iterations = 1e7;
    Exec exec = Exec::parallel;

    /// Throws PreconditionError unless 0 < eps <= 1, 0 < beta <= 1, d >= 1,
    /// iocp >= 1, caps >= 1 and 0 < failure_prob < 1.
    void validate() const;
};

struct DerivedConstants {
    double c = 0;
    double delta = 0;
    /// ceil((10 d / delta) ln(1 / delta)), saturated at 2^62.
    std::int64_t s = 0;
    /// Faithful iteration count; +inf when (beta/2)^s underflows.
    double t = 0;
    double log10_t = 0;
    int z = 0;
    /// floor(2 / (beta eps)) + 1 blocks S^0..S^floor(2/(beta eps)).
    int blocks = 0;
    /// ceil(2 / (beta eps)): candidate cut layers are L_1..L_window.
    int layer_window = 0;
    /// 2 / (beta eps), compared against the last layer index.
    double layer_threshold = 0;

    /// Effective values for a concrete run (equal to s, t in faithful mode).
    std::int64_t s_eff = 0;
    std::int64_t t_eff = 0;
};

/// Constants for `p`. With `n` given, practical-mode caps resolve against it;
/// without it, s_eff uses the explicit s_cap (or s when unset).
DerivedConstants compute_constants(const EptasParams& p, std::optional<int> n = std::nullopt);

/// ceil(ln(failure_prob) / ln(1 - (beta/2)^s)); 1 when s == 0.
double iterations_for(double beta, std::int64_t s, double failure_prob);

/// Draws s distinct vertices (uniformly, or weight-proportionally without
/// replacement via an exponential race when `weighted`). Returns nullopt when
/// the sample contains an edge. Throws PreconditionError when s > n.
template <typename Rng>
std::optional<VertexSet> sample_candidate(const Graph& h, std::int64_t s, bool weighted, Rng& rng);

enum class Branch { none, exact, bipartite, short_cycle, long_cycle, greedy };
std::string to_string(Branch b);

/// Layer / stratum / block decomposition of H' around a long shortest odd
/// cycle. Ids are those of H'.
struct LayerStrata {
    BfsLayers bfs;
    int lambda = 0;
    /// 1-based index of the deleted layer, 0 when lambda <= 2/(beta eps).
    int cut_layer = 0;
    /// Cycle position (0-based) of the minimal-index closest cycle vertex;
    /// -1 for unreached vertices.
    std::vector<int> stratum;
    VertexSet core;   // H'' = C ∪ L_1..L_{cut-1} (or every layer without a cut)
    VertexSet cut;    // L_cut
    VertexSet beyond; // L_{cut+1}..L_lambda
    VertexSet unreached;
    int z = 0;
    /// Blocks actually formed: min(floor(2/(beta eps)) + 1, floor(g / z)).
    std::vector<VertexSet> blocks;
    bool block_shortfall = false;
    int chosen_block = -1;
};

/// Requires g > c (PreconditionError otherwise).
LayerStrata build_layers_strata(const Graph& h1, const OddCycle& c, const EptasParams& p,
                                const DerivedConstants& dc);

struct CoreColoring {
    /// H'' - S^block, induced in H'.
    InducedSubgraph part;
    TwoColoring coloring;
    /// First monochromatic edge (H' ids) when the constructive coloring fails.
    std::optional<Edge> monochromatic;
};

/// Constructive coloring of H'' - S^block: alternate along the path that
/// remains of the cycle, then give each stratum L_k^l the opposite color of
/// L_{k-1}^l.
CoreColoring core_coloring(const Graph& h1, const OddCycle& c, int block, const LayerStrata& st);

struct EptasDiagnostics {
    std::int64_t iterations = 0;
    std::int64_t rejected_samples = 0;
    std::int64_t duplicate_samples = 0;
    std::int64_t exact_runs = 0;
    std::int64_t bipartite_branches = 0;
    std::int64_t short_cycle_branches = 0;
    std::int64_t long_cycle_branches = 0;
    std::int64_t coloring_checks = 0;
    std::int64_t coloring_violations = 0;
    std::int64_t block_shortfalls = 0;
    std::int64_t assumption_violations = 0;
    std::int64_t fallbacks = 0;
    std::int64_t recursive_calls = 0;
    /// Distinct violation messages, capped.
    std::vector<std::string> violations;

    Branch best_branch = Branch::none;
    std::int64_t best_iteration = -1;
    int best_g = 0;
    int best_lambda = 0;
    int best_cut_layer = 0;
    int best_block = -1;

    void merge_counters(const EptasDiagnostics& other);
    void note_violation(const std::string& message);
};

struct EptasResult {
    VertexSet vertices;
    double weight = 0;
    DerivedConstants constants;
    EptasDiagnostics diagnostics;
};

/// Randomized (1 - eps)-approximate maximum (weight) independent set for
/// graphs with bounded neighborhood VC-dimension, alpha >= beta n and
/// iocp <= 1. The class membership is the caller's promise; the output is an
/// independent set regardless.
EptasResult run_eptas(const Graph& h, const EptasParams& p);

/// iocp <= i variant: internal eps' = eps / i and every remainder that is not
/// bipartite is solved recursively with budget i - 1. i = 1 is run_eptas.
EptasResult run_eptas_iocp(const Graph& h, const EptasParams& p);

} // namespace geoclique

#include "geoclique/detail/sample.ipp"
