#pragma once

#include <optional>
#include <utility>

#include "geoclique/graph.hpp"
#include "geoclique/oddcycle.hpp"

namespace geoclique {

/// Size caps for the exhaustive oracles. Every oracle refuses (throws
/// Refusal) above its cap instead of truncating. `time_cap_seconds <= 0`
/// disables the wall-clock cap.
struct OracleBudget {
    int clique_mis_max_n = 24;
    int iocp_max_n = 14;
    int vcdim_max_n = 16;
    double time_cap_seconds = 0.0;
};

/// Exact maximum (weight) clique: Bron-Kerbosch with Tomita pivoting over
/// 64-bit masks, pruning branches whose candidate weight cannot beat the
/// incumbent.
VertexSet brute_force_max_clique(const Graph& g, const OracleBudget& budget = {});

/// Exact maximum (weight) independent set by branching on the closed
/// neighborhood of a minimum-degree vertex. With `weighted` false the graph's
/// weights are ignored.
VertexSet brute_force_mis(const Graph& g, bool weighted, const OracleBudget& budget = {});

/// Same search with an explicit vertex cap (used by the EPTAS small-instance
/// branch, which has its own limit).
VertexSet exact_mis_capped(const Graph& g, bool weighted, int max_n);

/// Odd girth by enumerating simple cycles from their smallest vertex with
/// length pruning; nullopt when the graph is bipartite.
std::optional<int> brute_force_odd_girth(const Graph& g, const OracleBudget& budget = {});

struct IocpCheck {
    bool holds = true;
    /// Two vertex-disjoint induced odd cycles with no edge between them.
    std::optional<std::pair<OddCycle, OddCycle>> witness;
    std::size_t induced_odd_cycles = 0;
};

/// Tests iocp(g) <= 1 by enumerating all induced odd cycles (DFS over induced
/// paths, canonical direction) and checking every pair.
IocpCheck check_iocp_le_one(const Graph& g, const OracleBudget& budget = {});

/// Independent implementation of the same predicate: every odd vertex subset
/// inducing a connected 2-regular graph is an induced odd cycle.
IocpCheck check_iocp_le_one_by_subsets(const Graph& g, int max_n = 20);

/// All induced odd cycles of g, each as a cyclically ordered vertex list.
std::vector<OddCycle> induced_odd_cycles(const Graph& g, const OracleBudget& budget = {});

/// VC-dimension of the open-neighborhood hypergraph {N(v)}: the largest X
/// such that every subset of X equals N(v) ∩ X for some v. Returns 0 for the
/// empty graph.
int vc_dimension_neighborhood(const Graph& g, const OracleBudget& budget = {});

} // namespace geoclique
