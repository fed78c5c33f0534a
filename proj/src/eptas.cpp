#include "geoclique/eptas.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "geoclique/bipartite.hpp"
#include "geoclique/errors.hpp"
#include "geoclique/oracle.hpp"

namespace geoclique {

namespace {

// The derived quantities are functions of the rational 1/(beta eps); snap
// values within rounding noise of an integer before taking ceil/floor.
double snap(double v) {
    const double r = std::round(v);
    return std::abs(v - r) <= 1e-9 * std::max(1.0, std::abs(v)) ? r : v;
}

int ceil_snapped(double v) { return static_cast<int>(std::ceil(snap(v))); }
int floor_snapped(double v) { return static_cast<int>(std::floor(snap(v))); }

constexpr std::int64_t kSaturated = std::int64_t{1} << 62;
constexpr std::size_t kMaxMessages = 16;

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

void EptasParams::validate() const {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw PreconditionError("epsilon must lie in (0, 1]");
    if (!(beta > 0.0 && beta <= 1.0)) throw PreconditionError("beta must lie in (0, 1]");
    if (d < 1) throw PreconditionError("d must be >= 1");
    if (iocp < 1) throw PreconditionError("iocp bound must be >= 1");
    if (!(failure_prob > 0.0 && failure_prob < 1.0)) throw PreconditionError("failure_prob must lie in (0, 1)");
    if (s_cap && *s_cap < 1) throw PreconditionError("s_cap must be >= 1");
    if (t_cap < 1) throw PreconditionError("t_cap must be >= 1");
    if (exact_limit < 0 || exact_limit > 64) throw PreconditionError("exact_limit must lie in [0, 64]");
}

double iterations_for(double beta, std::int64_t s, double failure_prob) {
    if (s <= 0) return 1.0;
    const long double hit = std::pow(static_cast<long double>(beta) / 2.0L, static_cast<long double>(s));
    if (hit <= 0.0L) return std::numeric_limits<double>::infinity();
    const long double t = std::log(static_cast<long double>(failure_prob)) / std::log1p(-hit);
    return static_cast<double>(std::ceil(t));
}

DerivedConstants compute_constants(const EptasParams& p, std::optional<int> n) {
    p.validate();
    DerivedConstants dc;
    const double x = 1.0 / (p.beta * p.epsilon);
    dc.c = 8.0 * (x * x + x + 1.0);
    dc.delta = p.epsilon / dc.c;
    const long double delta = static_cast<long double>(p.epsilon) / static_cast<long double>(dc.c);
    const long double s_real = 10.0L * p.d / delta * std::log(1.0L / delta);
    dc.s = s_real >= static_cast<long double>(kSaturated) ? kSaturated
                                                            : static_cast<std::int64_t>(std::ceil(s_real));
    dc.t = iterations_for(p.beta, dc.s, p.failure_prob);
    if (std::isfinite(dc.t)) {
        dc.log10_t = std::log10(dc.t);
    } else {
        // t ~ -ln(failure_prob) / (beta/2)^s once the hit probability underflows.
        dc.log10_t = std::log10(-std::log(p.failure_prob)) -
                     static_cast<double>(dc.s) * std::log10(p.beta / 2.0);
    }
    dc.z = ceil_snapped(4.0 * x) + 2;
    dc.blocks = floor_snapped(2.0 * x) + 1;
    dc.layer_window = ceil_snapped(2.0 * x);
    dc.layer_threshold = 2.0 * x;

    if (p.mode == EptasMode::faithful) {
        dc.s_eff = dc.s;
        dc.t_eff = std::isfinite(dc.t) && dc.t < static_cast<double>(kSaturated) ? static_cast<std::int64_t>(dc.t)
                                                                                 : kSaturated;
    } else {
        std::int64_t cap = dc.s;
        if (p.s_cap)
            cap = *p.s_cap;
        else if (n)
            cap = std::max(1, *n / 4);
        dc.s_eff = std::min(dc.s, cap);
        if (n) dc.s_eff = std::min<std::int64_t>(dc.s_eff, *n);
        const double t_eff = iterations_for(p.beta, dc.s_eff, p.failure_prob);
        dc.t_eff = std::isfinite(t_eff) && t_eff < static_cast<double>(p.t_cap) ? static_cast<std::int64_t>(t_eff)
                                                                                : p.t_cap;
    }
    return dc;
}

std::string to_string(Branch b) {
    switch (b) {
    case Branch::none: return "none";
    case Branch::exact: return "exact";
    case Branch::bipartite: return "bipartite";
    case Branch::short_cycle: return "short-cycle";
    case Branch::long_cycle: return "long-cycle";
    case Branch::greedy: return "greedy";
    }
    return "unknown";
}

void EptasDiagnostics::merge_counters(const EptasDiagnostics& other) {
    iterations += other.iterations;
    rejected_samples += other.rejected_samples;
    duplicate_samples += other.duplicate_samples;
    exact_runs += other.exact_runs;
    bipartite_branches += other.bipartite_branches;
    short_cycle_branches += other.short_cycle_branches;
    long_cycle_branches += other.long_cycle_branches;
    coloring_checks += other.coloring_checks;
    coloring_violations += other.coloring_violations;
    block_shortfalls += other.block_shortfalls;
    assumption_violations += other.assumption_violations;
    fallbacks += other.fallbacks;
    recursive_calls += other.recursive_calls;
    for (const auto& m : other.violations) note_violation(m);
}

void EptasDiagnostics::note_violation(const std::string& message) {
    if (violations.size() >= kMaxMessages) return;
    if (std::find(violations.begin(), violations.end(), message) == violations.end()) violations.push_back(message);
}

LayerStrata build_layers_strata(const Graph& h1, const OddCycle& c, const EptasParams& /*p*/,
                                const DerivedConstants& dc) {
    const int g = c.length();
    if (g <= dc.c)
        throw PreconditionError("build_layers_strata: cycle of length " + std::to_string(g) +
                                " is short (c = " + std::to_string(dc.c) + ")");
    LayerStrata st;
    st.bfs = bfs_layers(h1, c.vertices);
    st.lambda = st.bfs.last_index();
    st.unreached = st.bfs.unreached;
    st.z = dc.z;

    // Minimal cycle index reachable by a shortest path: inherit the minimum
    // over neighbors one layer closer to the cycle.
    st.stratum.assign(h1.n(), -1);
    for (int i = 0; i < g; ++i) st.stratum[c.vertices[i]] = i;
    for (const auto& layer : st.bfs.layers)
        for (Vertex w : layer) {
            int best = std::numeric_limits<int>::max();
            for (Vertex u : h1.neighbors(w))
                if (st.bfs.distance[u] == st.bfs.distance[w] - 1) best = std::min(best, st.stratum[u]);
            st.stratum[w] = best;
        }

    if (st.lambda > dc.layer_threshold) {
        const int window = std::min(dc.layer_window, st.lambda);
        double lightest = std::numeric_limits<double>::infinity();
        for (int k = 1; k <= window; ++k) {
            const double w = h1.weight_of(st.bfs.layers[k - 1]);
            if (w < lightest) {
                lightest = w;
                st.cut_layer = k;
            }
        }
    }
    const int core_depth = st.cut_layer > 0 ? st.cut_layer - 1 : st.lambda;
    st.core = c.vertices;
    for (int k = 1; k <= core_depth; ++k)
        st.core.insert(st.core.end(), st.bfs.layers[k - 1].begin(), st.bfs.layers[k - 1].end());
    std::sort(st.core.begin(), st.core.end());
    if (st.cut_layer > 0) {
        st.cut = st.bfs.layers[st.cut_layer - 1];
        for (int k = st.cut_layer + 1; k <= st.lambda; ++k)
            st.beyond.insert(st.beyond.end(), st.bfs.layers[k - 1].begin(), st.bfs.layers[k - 1].end());
        std::sort(st.beyond.begin(), st.beyond.end());
    }

    const int formed = std::min(dc.blocks, g / dc.z);
    st.block_shortfall = formed < dc.blocks;
    st.blocks.assign(formed, {});
    for (Vertex v : st.core) {
        const int gamma = st.stratum[v] / dc.z;
        if (gamma < formed) st.blocks[gamma].push_back(v);
    }
    double lightest = std::numeric_limits<double>::infinity();
    for (int gamma = 0; gamma < formed; ++gamma) {
        const double w = h1.weight_of(st.blocks[gamma]);
        if (w < lightest) {
            lightest = w;
            st.chosen_block = gamma;
        }
    }
    // Pigeonhole over disjoint blocks.
    if (formed > 0 && lightest > h1.weight_of(st.core) / formed + 1e-9)
        throw std::logic_error("build_layers_strata: lightest block exceeds the pigeonhole bound");
    return st;
}

CoreColoring core_coloring(const Graph& h1, const OddCycle& c, int block, const LayerStrata& st) {
    if (block < 0 || block >= static_cast<int>(st.blocks.size()))
        throw PreconditionError("core_coloring: block index out of range");
    const int g = c.length();
    const int lo = block * st.z;
    const int hi = lo + st.z; // block covers cycle positions [lo, hi)
    auto in_block = [&](int position) { return position >= lo && position < hi; };

    VertexSet kept;
    for (Vertex v : st.core)
        if (!in_block(st.stratum[v])) kept.push_back(v);

    CoreColoring out;
    out.part = induced_subgraph(h1, kept);
    // Path C - S^block starts right after the block and wraps around.
    std::vector<std::uint8_t> cycle_color(g, 0);
    for (int step = 0; step < g - st.z; ++step) cycle_color[(hi + step) % g] = static_cast<std::uint8_t>(step & 1);

    out.coloring.color.resize(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        const Vertex v = kept[i];
        out.coloring.color[i] =
            static_cast<std::uint8_t>(cycle_color[st.stratum[v]] ^ (st.bfs.distance[v] & 1));
    }
    const Graph& b = out.part.graph;
    for (Vertex u = 0; u < b.n() && !out.monochromatic; ++u)
        for (Vertex v : b.neighbors(u))
            if (u < v && out.coloring.color[u] == out.coloring.color[v]) {
                out.monochromatic = Edge{out.part.to_parent[u], out.part.to_parent[v]};
                break;
            }
    return out;
}

namespace {

struct Outcome {
    VertexSet set;
    double weight = -1.0;
    Branch branch = Branch::none;
    int g = 0;
    int lambda = 0;
    int cut_layer = 0;
    int block = -1;
    EptasDiagnostics counters;
};

class LevelSolver {
public:
    explicit LevelSolver(const EptasParams& p) : p_(p) {}

    EptasResult solve(const Graph& h, int budget, std::uint64_t seed, Exec exec) const;

private:
    EptasParams level_params(int budget) const {
        EptasParams q = p_;
        q.iocp = budget;
        return q;
    }

    Outcome run_sample(const Graph& h, const VertexSet& sample, int budget, std::uint64_t seed,
                       const DerivedConstants& dc) const;
    VertexSet solve_remainder(const Graph& r, int budget, std::uint64_t seed, EptasDiagnostics& diag,
                              const char* where) const;
    VertexSet cycle_transversal_fallback(const Graph& r) const;

    EptasParams p_;
};

EptasResult LevelSolver::solve(const Graph& h, int budget, std::uint64_t seed, Exec exec) const {
    const EptasParams q = level_params(budget);
    EptasResult result;
    result.constants = compute_constants(q, h.n());
    const DerivedConstants& dc = result.constants;
    EptasDiagnostics& diag = result.diagnostics;
    const int n = h.n();
    if (n == 0) return result;

    const bool small = q.mode == EptasMode::faithful ? q.beta * n < 2.0 * static_cast<double>(dc.s)
                                                  : n < 2 * dc.s_eff;
    if (small) {
        if (n > q.exact_limit)
            throw Refusal("EPTAS: small-instance exact branch needs n <= " + std::to_string(q.exact_limit) +
                          " but n = " + std::to_string(n) + " (beta n < 2 s with s = " + std::to_string(dc.s) + ")");
        result.vertices = exact_mis_capped(h, h.weighted(), q.exact_limit);
        result.weight = h.weight_of(result.vertices);
        diag.exact_runs = 1;
        diag.best_branch = Branch::exact;
        return result;
    }
    if (q.mode == EptasMode::faithful && static_cast<double>(dc.t_eff) > q.max_iterations)
        throw Refusal("EPTAS: faithful-mode iteration count 10^" + std::to_string(dc.log10_t) + " is out of reach");

    // Draw every sample up front; identical samples give identical outcomes.
    struct Task {
        std::int64_t iteration;
        VertexSet sample;
    };
    std::vector<Task> tasks;
    std::map<VertexSet, std::int64_t> seen;
    for (std::int64_t it = 0; it < dc.t_eff; ++it) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(it), static_cast<std::uint64_t>(budget)));
        auto sample = sample_candidate(h, dc.s_eff, h.weighted(), rng);
        ++diag.iterations;
        if (!sample) {
            ++diag.rejected_samples;
            continue;
        }
        if (!seen.emplace(*sample, it).second) {
            ++diag.duplicate_samples;
            continue;
        }
        tasks.push_back({it, std::move(*sample)});
    }

    const long count = static_cast<long>(tasks.size());
    std::vector<Outcome> outcomes(count);
    std::vector<std::exception_ptr> errors(count);
    auto work = [&](long i) {
        try {
            const auto task_seed = derive_seed(seed, static_cast<std::uint64_t>(tasks[i].iteration),
                                               0x5eed0000ULL + static_cast<std::uint64_t>(budget));
            outcomes[i] = run_sample(h, tasks[i].sample, budget, task_seed, dc);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < count; ++i) work(i);
    } else {
        for (long i = 0; i < count; ++i) work(i);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    Outcome best;
    if (q.mode == EptasMode::practical) {
        best.set = greedy_independent_set(h);
        best.weight = h.weight_of(best.set);
        best.branch = Branch::greedy;
    }
    std::int64_t best_iteration = -1;
    for (long i = 0; i < count; ++i) {
        Outcome& o = outcomes[i];
        diag.merge_counters(o.counters);
        const bool replace = best.branch == Branch::greedy ? o.weight >= best.weight
                             : best.branch == Branch::none ? true
                                                           : o.weight > best.weight ||
                                                                 (o.weight == best.weight && o.set < best.set);
        if (replace) {
            best_iteration = tasks[i].iteration;
            best = std::move(o);
        }
    }
    if (!is_independent_set(h, best.set)) throw std::logic_error("EPTAS produced a dependent set");
    result.vertices = std::move(best.set);
    result.weight = h.weight_of(result.vertices);
    diag.best_branch = best.branch;
    diag.best_iteration = best_iteration;
    diag.best_g = best.g;
    diag.best_lambda = best.lambda;
    diag.best_cut_layer = best.cut_layer;
    diag.best_block = best.block;
    return result;
}

Outcome LevelSolver::run_sample(const Graph& h, const VertexSet& sample, int budget, std::uint64_t seed,
                                const DerivedConstants& dc) const {
    Outcome out;
    const InducedSubgraph h1 = induced_subgraph(h, vertices_except(h, closed_neighborhood(h, sample)));
    const Graph& hp = h1.graph;
    const auto cycle = shortest_odd_cycle(hp, Exec::serial);
    VertexSet local;
    if (!cycle) {
        out.branch = Branch::bipartite;
        ++out.counters.bipartite_branches;
        local = solve_bipartite_mis(hp, *bipartite_2coloring(hp));
    } else if (cycle->length() <= dc.c) {
        out.branch = Branch::short_cycle;
        out.g = cycle->length();
        ++out.counters.short_cycle_branches;
        const auto rest = induced_subgraph(hp, vertices_except(hp, closed_neighborhood(hp, cycle->vertices)));
        local = rest.lift(solve_remainder(rest.graph, budget, derive_seed(seed, 1), out.counters,
                                          "H' - N[C_og] (short cycle)"));
    } else {
        out.branch = Branch::long_cycle;
        out.g = cycle->length();
        ++out.counters.long_cycle_branches;
        const LayerStrata st = build_layers_strata(hp, *cycle, level_params(budget), dc);
        out.lambda = st.lambda;
        out.cut_layer = st.cut_layer;
        out.block = st.chosen_block;
        if (st.block_shortfall) ++out.counters.block_shortfalls;

        VertexSet outside = set_union(st.beyond, st.unreached);
        const auto far = induced_subgraph(hp, outside);
        local = far.lift(solve_remainder(far.graph, budget, derive_seed(seed, 2), out.counters,
                                         "layers beyond the cut / unreached components"));

        const CoreColoring cc = core_coloring(hp, *cycle, st.chosen_block, st);
        ++out.counters.coloring_checks;
        VertexSet core_local;
        if (cc.monochromatic) {
            ++out.counters.coloring_violations;
            ++out.counters.assumption_violations;
            const auto [a, b] = *cc.monochromatic;
            const std::string message = "constructive 2-coloring of H'' - S^gamma is improper at edge (" +
                                        std::to_string(h1.to_parent[a]) + ", " + std::to_string(h1.to_parent[b]) + ")";
            out.counters.note_violation(message);
            if (!p_.robust) throw AssumptionViolation(message);
            core_local = solve_remainder(cc.part.graph, budget, derive_seed(seed, 3), out.counters,
                                         "H'' - S^gamma");
        } else {
            core_local = solve_bipartite_mis(cc.part.graph, cc.coloring);
        }
        local = set_union(local, cc.part.lift(core_local));
    }
    out.set = set_union(sample, h1.lift(local));
    out.weight = h.weight_of(out.set);
    return out;
}

VertexSet LevelSolver::solve_remainder(const Graph& r, int budget, std::uint64_t seed, EptasDiagnostics& diag,
                                       const char* where) const {
    if (r.n() == 0) return {};
    if (auto coloring = bipartite_2coloring(r)) return solve_bipartite_mis(r, *coloring);
    if (budget > 1) {
        ++diag.recursive_calls;
        EptasResult sub = solve(r, budget - 1, seed, Exec::serial);
        diag.merge_counters(sub.diagnostics);
        return sub.vertices;
    }
    ++diag.assumption_violations;
    const std::string message = std::string("not bipartite: ") + where;
    diag.note_violation(message);
    if (!p_.robust) throw AssumptionViolation(message);
    ++diag.fallbacks;
    return cycle_transversal_fallback(r);
}

// Deletes a maximum-degree vertex of a shortest odd cycle until the graph is
// bipartite, then solves what is left exactly.
VertexSet LevelSolver::cycle_transversal_fallback(const Graph& r) const {
    VertexSet alive(r.n());
    for (Vertex v = 0; v < r.n(); ++v) alive[v] = v;
    for (;;) {
        const InducedSubgraph sub = induced_subgraph(r, alive);
        const auto cycle = shortest_odd_cycle(sub.graph, Exec::serial);
        if (!cycle) return sub.lift(solve_bipartite_mis(sub.graph, *bipartite_2coloring(sub.graph)));
        Vertex drop = cycle->vertices.front();
        for (Vertex v : cycle->vertices)
            if (sub.graph.degree(v) > sub.graph.degree(drop) ||
                (sub.graph.degree(v) == sub.graph.degree(drop) && v < drop))
                drop = v;
        alive.erase(std::find(alive.begin(), alive.end(), sub.to_parent[drop]));
    }
}

} // namespace

EptasResult run_eptas(const Graph& h, const EptasParams& p) {
    EptasParams q = p;
    q.iocp = 1;
    q.validate();
    return LevelSolver(q).solve(h, 1, q.seed, q.exec);
}

EptasResult run_eptas_iocp(const Graph& h, const EptasParams& p) {
    p.validate();
    if (p.iocp == 1) return run_eptas(h, p);
    EptasParams q = p;
    q.epsilon = p.epsilon / p.iocp;
    return LevelSolver(q).solve(h, p.iocp, q.seed, q.exec);
}

} // namespace geoclique
