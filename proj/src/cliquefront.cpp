#include "geoclique/cliquefront.hpp"

#include <algorithm>
#include <exception>
#include <limits>

#include "geoclique/bipartite.hpp"
#include "geoclique/errors.hpp"
#include "geoclique/oracle.hpp"

namespace geoclique {

namespace {

constexpr std::uint64_t kDiskSalt = 0xd15c;
constexpr std::uint64_t kBallSalt = 0xba11;

struct Candidate {
    VertexSet vertices;
    double weight = -1.0;
    EptasDiagnostics diagnostics;
    bool ran = false;
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.vertices < b.vertices;
}

// Solves MIS on the complement of g[members] and maps it back as a clique of g.
Candidate clique_in(const Graph& g, const VertexSet& members, const EptasParams& p) {
    const InducedSubgraph sub = induced_subgraph(g, members);
    EptasResult r = run_eptas_iocp(complement(sub.graph), p);
    Candidate c;
    c.vertices = sub.lift(r.vertices);
    c.weight = g.weight_of(c.vertices);
    c.diagnostics = std::move(r.diagnostics);
    c.ran = true;
    return c;
}

template <typename Body>
void run_indexed(long count, Exec exec, Body body) {
    std::vector<std::exception_ptr> errors(count);
    auto guarded = [&](long i) {
        try {
            body(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < count; ++i) guarded(i);
    } else {
        for (long i = 0; i < count; ++i) guarded(i);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

CliqueSolution assemble(std::vector<Candidate>& candidates, Candidate floor, const Graph& g, std::string method,
                        const EptasParams& p) {
    CliqueSolution out;
    out.method = std::move(method);
    out.epsilon = p.epsilon;
    out.beta = p.beta;
    Candidate* best = &floor;
    for (auto& c : candidates) {
        if (!c.ran) {
            ++out.pruned;
            continue;
        }
        ++out.branches;
        out.diagnostics.merge_counters(c.diagnostics);
        if (better(c, *best)) best = &c;
    }
    out.vertices = best->vertices;
    out.weight = g.weight_of(out.vertices);
    const EptasDiagnostics& won = best->diagnostics;
    out.diagnostics.best_branch = best->ran ? won.best_branch : Branch::greedy;
    out.diagnostics.best_iteration = won.best_iteration;
    out.diagnostics.best_g = won.best_g;
    out.diagnostics.best_lambda = won.best_lambda;
    out.diagnostics.best_cut_layer = won.best_cut_layer;
    out.diagnostics.best_block = won.best_block;
    certify(out, g);
    return out;
}

void require_dim(const GeometricInstance& inst, int dim, const char* who) {
    inst.validate();
    if (inst.dim != dim)
        throw PreconditionError(std::string(who) + ": expected dimension " + std::to_string(dim) + ", got " +
                                std::to_string(inst.dim));
}

} // namespace

CliqueSolution& certify(CliqueSolution& s, const Graph& g) {
    s.valid = std::all_of(s.vertices.begin(), s.vertices.end(), [&](Vertex v) { return v >= 0 && v < g.n(); }) &&
              std::adjacent_find(s.vertices.begin(), s.vertices.end(), std::greater_equal<>()) == s.vertices.end() &&
              is_clique(g, s.vertices);
    return s;
}

CliqueSolution max_clique_disks(const GeometricInstance& inst, const EptasParams& p) {
    require_dim(inst, 2, "max_clique_disks");
    if (inst.kind != InstanceKind::balls) throw PreconditionError("max_clique_disks: expected disks");
    const Graph g = intersection_graph(inst, kDefaultMargin, p.exec).graph;
    EptasParams q = p;
    q.beta = 1.0 / 6.0;
    q.d = 4;
    q.exec = Exec::serial;

    // Elimination order: v_i has minimum degree in G - {v_1..v_{i-1}}.
    const int n = g.n();
    std::vector<Vertex> order;
    std::vector<VertexSet> members;
    std::vector<char> alive(n, 1);
    std::vector<int> degree(n);
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        Vertex v = -1;
        for (Vertex u = 0; u < n; ++u)
            if (alive[u] && (v < 0 || degree[u] < degree[v])) v = u;
        VertexSet closed{v};
        for (Vertex u : g.neighbors(v))
            if (alive[u]) {
                closed.push_back(u);
                --degree[u];
            }
        std::sort(closed.begin(), closed.end());
        alive[v] = 0;
        order.push_back(v);
        members.push_back(std::move(closed));
    }

    std::vector<Candidate> candidates(n);
    run_indexed(n, p.exec, [&](long i) {
        EptasParams local = q;
        local.seed = derive_seed(p.seed, static_cast<std::uint64_t>(order[i]), kDiskSalt);
        candidates[i] = clique_in(g, members[i], local);
    });
    return assemble(candidates, Candidate{}, g, "eptas-disks", q);
}

CliqueSolution max_clique_unit_balls(const GeometricInstance& inst, const EptasParams& p, bool force) {
    require_dim(inst, 3, "max_clique_unit_balls");
    if (!inst.equal_radii() && !force)
        throw Refusal("max_clique_unit_balls: radii differ, so the unit-ball guarantee does not apply (use force)");
    const Graph g = intersection_graph(inst, kDefaultMargin, p.exec).graph;
    EptasParams q = p;
    q.beta = 1.0 / 25.0;
    q.d = 4;
    q.exec = Exec::serial;

    const int n = g.n();
    // Greedy clique as a lower bound: branches whose closed neighborhood
    // weighs no more than it cannot win.
    Candidate floor;
    floor.vertices = greedy_independent_set(complement(g));
    floor.weight = g.weight_of(floor.vertices);

    std::vector<Candidate> candidates(n);
    run_indexed(n, p.exec, [&](long i) {
        const Vertex v = static_cast<Vertex>(i);
        const auto nbrs = g.neighbors(v);
        if (g.weight(v) + g.weight_of(nbrs) <= floor.weight) return;
        EptasParams local = q;
        local.seed = derive_seed(p.seed, static_cast<std::uint64_t>(v), kBallSalt);
        Candidate c = clique_in(g, VertexSet(nbrs.begin(), nbrs.end()), local);
        c.vertices.insert(std::upper_bound(c.vertices.begin(), c.vertices.end(), v), v);
        c.weight = g.weight_of(c.vertices);
        candidates[i] = std::move(c);
    });
    return assemble(candidates, floor, g, "eptas-unit-balls", q);
}

CliqueSolution max_diameter_one_subset(std::span<const Point> points, const EptasParams& p) {
    for (const auto& pt : points)
        if (pt.dim != 3) throw PreconditionError("max_diameter_one_subset: points must be 3-dimensional");
    const auto inst = GeometricInstance::from_points(3, {points.begin(), points.end()}, 1.0);
    CliqueSolution s = max_clique_unit_balls(inst, p);
    s.method = "eptas-diameter-one";
    if (!s.vertices.empty()) {
        std::vector<Point> chosen;
        for (Vertex v : s.vertices) chosen.push_back(points[v]);
        s.valid = s.valid && diameter(chosen, Exec::serial) <= 1.0;
    }
    return s;
}

CliqueSolution exact_unit_disk_clique(std::span<const Point> points, double r, Exec exec) {
    if (!(r > 0.0)) throw PreconditionError("exact_unit_disk_clique: radius must be positive");
    for (const auto& pt : points)
        if (pt.dim != 2) throw PreconditionError("exact_unit_disk_clique: points must be 2-dimensional");
    const auto inst = GeometricInstance::from_points(2, {points.begin(), points.end()}, 2.0 * r);
    const Graph g = intersection_graph(inst, kDefaultMargin, exec).graph;
    const int n = g.n();

    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) pairs.emplace_back(u, v);

    struct PairResult {
        VertexSet clique;
        bool degenerate = false;
    };
    std::vector<PairResult> results(pairs.size());
    run_indexed(static_cast<long>(pairs.size()), exec, [&](long i) {
        const auto [u, v] = pairs[i];
        const Point& a = points[u];
        const Point& b = points[v];
        const double d2 = squared_distance(a, b);
        VertexSet lens;
        std::vector<std::uint8_t> side;
        for (Vertex w = 0; w < n; ++w) {
            const Point& c = points[w];
            if (squared_distance(c, a) > d2 || squared_distance(c, b) > d2) continue;
            const double cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
            lens.push_back(w);
            side.push_back(cross > 0.0 ? 1 : 0);
        }
        const InducedSubgraph sub = induced_subgraph(g, lens);
        const Graph co = complement(sub.graph);
        TwoColoring coloring{side};
        VertexSet local;
        if (is_proper_coloring(co, coloring)) {
            local = max_independent_set_bipartite(co, coloring);
        } else if (auto other = bipartite_2coloring(co)) {
            results[i].degenerate = true;
            local = max_independent_set_bipartite(co, *other);
        } else {
            results[i].degenerate = true;
            local = exact_mis_capped(co, false, 64);
        }
        results[i].clique = sub.lift(local);
    });

    CliqueSolution out;
    out.method = "exact-unit-disk";
    if (n > 0) out.vertices = {0};
    for (const auto& res : results) {
        out.degenerate_pairs += res.degenerate ? 1 : 0;
        if (res.clique.size() > out.vertices.size() ||
            (res.clique.size() == out.vertices.size() && res.clique < out.vertices))
            out.vertices = res.clique;
    }
    out.weight = g.weight_of(out.vertices);
    certify(out, g);
    return out;
}

} // namespace geoclique
