#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "geoclique/eptas.hpp"
#include "geoclique/errors.hpp"
#include "geoclique/generators.hpp"
#include "geoclique/oracle.hpp"

using namespace geoclique;
namespace fx = geoclique::fixtures;

namespace {

EptasParams long_cycle_params(std::uint64_t seed) {
    EptasParams p;
    p.epsilon = 0.9;
    p.beta = 1.0;
    p.d = 1;
    p.s_cap = 1;
    p.t_cap = 200;
    p.seed = seed;
    p.robust = false;
    return p;
}

// C_27 with a triangle hanging off vertex 0 through one edge: two disjoint
// anti-adjacent odd cycles, so the constructive coloring must break.
Graph cycle_with_far_triangle() {
    auto e = fx::cycle(27).edges();
    e.insert(e.end(), {{0, 27}, {27, 28}, {27, 29}, {28, 29}});
    return Graph::from_edge_list(30, e);
}

} // namespace

TEST_SUITE("eptas") {
    TEST_CASE("constants by direct substitution") {
        EptasParams p;
        p.epsilon = 1.0;
        p.beta = 1.0;
        p.d = 1;
        const auto a = compute_constants(p);
        CHECK(a.c == 24.0);
        CHECK(a.z == 6);
        CHECK(a.blocks == 3);
        p.epsilon = 0.5;
        p.d = 4;
        const auto b = compute_constants(p);
        CHECK(b.c == 56.0);
        CHECK(b.delta == doctest::Approx(1.0 / 112.0));
        CHECK(b.z == 10);
        CHECK(b.blocks == 5);
        CHECK(b.layer_window == 4);
    }

    TEST_CASE("s and t match the independent recomputation") {
        // Frozen from scripts/recompute_constants.py (exact rationals, mpmath).
        EptasParams p;
        p.epsilon = 1.0;
        p.beta = 1.0;
        p.d = 1;
        p.s_cap = 4;
        auto a = compute_constants(p);
        CHECK(a.s == 763);
        CHECK(a.log10_t == doctest::Approx(231.04810238031712).epsilon(1e-12));
        CHECK(a.s_eff == 4);
        CHECK(a.t_eff == 357);
        p.epsilon = 0.5;
        p.d = 4;
        a = compute_constants(p);
        CHECK(a.s == 21139);
        CHECK(a.log10_t == doctest::Approx(6364.835294029598).epsilon(1e-12));
        p.epsilon = 0.2;
        p.beta = 1.0 / 6.0;
        a = compute_constants(p);
        CHECK(a.c == doctest::Approx(7448.0));
        CHECK(a.s == 15678247);
        CHECK(a.z == 122);
        CHECK(a.blocks == 61);
        CHECK(a.t_eff == 1000);
        p.beta = 1.0 / 25.0;
        p.s_cap = 3;
        a = compute_constants(p);
        CHECK(a.c == doctest::Approx(126008.0));
        CHECK(a.s == 336530539);
        CHECK(a.z == 502);
        CHECK(a.t_eff == 1000);
    }

    TEST_CASE("iteration count") {
        CHECK(iterations_for(1.0, 0, 1e-10) == 1.0);
        // ceil(ln 1e-10 / ln(1 - 1/2)) = ceil(33.22) = 34
        CHECK(iterations_for(1.0, 1, 1e-10) == 34.0);
        CHECK(std::isinf(iterations_for(1.0, 5000, 1e-10)));
    }

    TEST_CASE("block count can fall short of the promise") {
        EptasParams p;
        p.beta = 1.0;
        p.epsilon = 1.0 / 1000.0001;
        const auto dc = compute_constants(p);
        CHECK(dc.z == 4003);
        CHECK(dc.blocks == 2001);
        // The shortest odd length above c does not hold `blocks` full blocks.
        double g = std::floor(dc.c) + 1.0;
        if (std::fmod(g, 2.0) == 0.0) g += 1.0;
        CHECK(g > dc.c);
        CHECK(static_cast<double>(dc.z) * dc.blocks > g);
    }

    TEST_CASE("parameter validation") {
        EptasParams p;
        p.epsilon = 0.0;
        CHECK_THROWS_AS(p.validate(), PreconditionError);
        p.epsilon = 0.2;
        p.beta = 1.5;
        CHECK_THROWS_AS(p.validate(), PreconditionError);
        p.beta = 1.0;
        p.iocp = 0;
        CHECK_THROWS_AS(p.validate(), PreconditionError);
    }

    TEST_CASE("sampling") {
        const Graph g = Graph::from_edge_list(6, {{0, 1}});
        std::mt19937_64 rng(1);
        for (int i = 0; i < 50; ++i) {
            const auto s = sample_candidate(g, 3, false, rng);
            if (!s) continue;
            CHECK(s->size() == 3);
            CHECK(std::is_sorted(s->begin(), s->end()));
            CHECK(is_independent_set(g, *s));
        }
        CHECK_THROWS_AS(sample_candidate(g, 7, false, rng), PreconditionError);
        // Zero-weight vertices are drawn only after all positive ones.
        const Graph w = Graph::from_edge_list(4, {}).with_weights({0, 1, 0, 2});
        for (int i = 0; i < 20; ++i) CHECK(*sample_candidate(w, 2, true, rng) == VertexSet{1, 3});
    }

    TEST_CASE("layers, strata and blocks on a long cycle") {
        const Graph g = fx::long_cycle_graph(4);
        const auto c = shortest_odd_cycle(g);
        REQUIRE(c.has_value());
        const EptasParams p = long_cycle_params(0);
        const auto dc = compute_constants(p);
        const LayerStrata st = build_layers_strata(g, *c, p, dc);
        CHECK(st.z == 7);
        CHECK(st.blocks.size() == 3u);
        CHECK_FALSE(st.block_shortfall);
        for (std::size_t i = 0; i < c->vertices.size(); ++i) CHECK(st.stratum[c->vertices[i]] == static_cast<int>(i));
        // Stratum of a layer vertex: minimum over its predecessors.
        for (const auto& layer : st.bfs.layers)
            for (Vertex w : layer) {
                int best = 1 << 30;
                for (Vertex u : g.neighbors(w))
                    if (st.bfs.distance[u] == st.bfs.distance[w] - 1) best = std::min(best, st.stratum[u]);
                CHECK(st.stratum[w] == best);
            }
        double lightest = 1e300;
        for (const auto& b : st.blocks) lightest = std::min(lightest, g.weight_of(b));
        CHECK(g.weight_of(st.blocks[st.chosen_block]) == lightest);
        if (st.lambda > dc.layer_threshold) {
            CHECK(st.cut_layer >= 1);
            CHECK(st.cut_layer <= dc.layer_window);
        }
        CHECK(st.unreached.size() >= 10u);
    }

    TEST_CASE("a deep pendant path forces a layer cut") {
        auto e = fx::cycle(27).edges();
        for (int k = 0; k < 6; ++k) e.emplace_back(k == 0 ? 0 : 26 + k, 27 + k);
        const Graph g = Graph::from_edge_list(33, e);
        const auto c = shortest_odd_cycle(g);
        const EptasParams p = long_cycle_params(0);
        const auto dc = compute_constants(p);
        const LayerStrata st = build_layers_strata(g, *c, p, dc);
        CHECK(st.lambda == 6);
        REQUIRE(st.cut_layer >= 1);
        CHECK(st.cut.size() == 1u);
        CHECK(st.beyond.size() == static_cast<std::size_t>(6 - st.cut_layer));
        CHECK(st.core.size() == static_cast<std::size_t>(27 + st.cut_layer - 1));
    }

    TEST_CASE("short cycles are rejected by the layer builder") {
        const Graph g = fx::cycle(7);
        const EptasParams p = long_cycle_params(0);
        CHECK_THROWS_AS(build_layers_strata(g, *shortest_odd_cycle(g), p, compute_constants(p)), PreconditionError);
    }

    TEST_CASE("constructive coloring is proper for every block") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const Graph g = fx::long_cycle_graph(seed);
            const auto c = shortest_odd_cycle(g);
            const EptasParams p = long_cycle_params(seed);
            const auto dc = compute_constants(p);
            const LayerStrata st = build_layers_strata(g, *c, p, dc);
            for (int b = 0; b < static_cast<int>(st.blocks.size()); ++b) {
                const CoreColoring cc = core_coloring(g, *c, b, st);
                CHECK_FALSE(cc.monochromatic.has_value());
                CHECK(is_proper_coloring(cc.part.graph, cc.coloring));
            }
        }
    }

    TEST_CASE("constructive coloring reports a monochromatic edge") {
        const Graph g = cycle_with_far_triangle();
        const auto c = shortest_odd_cycle(g);
        REQUIRE(c->length() == 3);
        // Use the long cycle itself as the reference cycle.
        OddCycle big;
        for (int i = 0; i < 27; ++i) big.vertices.push_back(i);
        const EptasParams p = long_cycle_params(0);
        const auto dc = compute_constants(p);
        const LayerStrata st = build_layers_strata(g, big, p, dc);
        int broken = 0;
        for (int b = 0; b < static_cast<int>(st.blocks.size()); ++b)
            if (core_coloring(g, big, b, st).monochromatic) ++broken;
        CHECK(broken > 0);
    }

    TEST_CASE("run_eptas returns independent sets and is deterministic") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Graph g = random_graph(30, 0.1, seed);
            EptasParams p;
            p.seed = seed;
            p.exec = Exec::serial;
            const auto a = run_eptas(g, p);
            CHECK(is_independent_set(g, a.vertices));
            p.exec = Exec::parallel;
            const auto b = run_eptas(g, p);
            CHECK(a.vertices == b.vertices);
            CHECK(a.diagnostics.iterations == b.diagnostics.iterations);
        }
    }

    TEST_CASE("long-cycle branch runs with zero coloring violations") {
        std::int64_t long_branches = 0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Graph g = fx::long_cycle_graph(seed);
            const auto r = run_eptas(g, long_cycle_params(seed));
            CHECK(is_independent_set(g, r.vertices));
            CHECK(r.diagnostics.coloring_violations == 0);
            CHECK(r.diagnostics.assumption_violations == 0);
            long_branches += r.diagnostics.long_cycle_branches;
        }
        CHECK(long_branches > 0);
    }

    TEST_CASE("faithful mode brute-forces small inputs and refuses larger ones") {
        EptasParams p;
        p.mode = EptasMode::faithful;
        const Graph g = random_graph(20, 0.3, 1);
        const auto r = run_eptas(g, p);
        CHECK(r.vertices.size() == brute_force_mis(g, false).size());
        CHECK(r.diagnostics.best_branch == Branch::exact);
        CHECK_THROWS_AS(run_eptas(random_graph(31, 0.3, 1), p), Refusal);
    }

    TEST_CASE("weighted input") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const Graph g = with_random_weights(random_bipartite_graph(16, 0.3, seed), 1, 10, seed);
            EptasParams p;
            p.seed = seed;
            const auto r = run_eptas(g, p);
            CHECK(is_independent_set(g, r.vertices));
            CHECK(r.weight == g.weight_of(r.vertices));
            CHECK(r.weight >= 0.8 * g.weight_of(brute_force_mis(g, true)));
        }
    }

    TEST_CASE("strict mode surfaces a broken promise, robust mode recovers") {
        // Three anti-adjacent C5s: after removing one sampled vertex and one
        // short cycle, an odd cycle always remains.
        const Graph g = fx::disjoint_union(fx::disjoint_union(fx::cycle(5), fx::cycle(5)), fx::cycle(5));
        EptasParams p;
        p.s_cap = 1;
        p.robust = false;
        CHECK_THROWS_AS(run_eptas(g, p), AssumptionViolation);
        p.robust = true;
        const auto r = run_eptas(g, p);
        CHECK(is_independent_set(g, r.vertices));
        CHECK(r.diagnostics.assumption_violations > 0);
        CHECK(r.diagnostics.fallbacks > 0);
        CHECK_FALSE(r.diagnostics.violations.empty());
    }

    TEST_CASE("iocp recursion") {
        const Graph two = fx::disjoint_union(fx::cycle(5), fx::cycle(5));
        EptasParams p;
        p.iocp = 2;
        p.robust = false;
        CHECK(run_eptas_iocp(two, p).vertices.size() == 4u);
        const Graph three = fx::disjoint_union(two, fx::cycle(5));
        p.iocp = 3;
        p.s_cap = 1;
        const auto r = run_eptas_iocp(three, p);
        CHECK(r.vertices.size() == 6u);
        CHECK(r.diagnostics.recursive_calls > 0);
        CHECK(r.diagnostics.assumption_violations == 0);
        p.iocp = 1;
        CHECK_THROWS_AS(run_eptas_iocp(three, p), AssumptionViolation);
    }
}
