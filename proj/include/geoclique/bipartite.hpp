#pragma once

#include <vector>

#include "geoclique/graph.hpp"

namespace geoclique {

/// mate[v] is v's partner or -1. Always an involution over matched vertices.
struct Matching {
    std::vector<Vertex> mate;

    int size() const;
    bool valid_in(const Graph& g) const;
};

/// Maximum cardinality matching by Hopcroft-Karp layered augmentation.
/// Throws PreconditionError when `coloring` is not a proper 2-coloring of g.
Matching max_matching(const Graph& g, const TwoColoring& coloring);

/// Maximum independent set of a bipartite graph via Koenig's theorem:
/// alternating reachability from unmatched side-0 vertices gives the minimum
/// vertex cover, whose complement is returned. Size is n - |max matching|.
VertexSet max_independent_set_bipartite(const Graph& g, const TwoColoring& coloring);

/// Maximum-weight independent set of a bipartite graph from a minimum s-t cut
/// on source -> side 0 (capacity w), side 0 -> side 1 (infinite), side 1 ->
/// sink (capacity w). Integer weights use exact 64-bit capacities; other
/// weights use doubles with a 1e-9 residual slack.
VertexSet max_weight_independent_set_bipartite(const Graph& g, const TwoColoring& coloring);

/// Dispatches on whether g carries weights.
VertexSet solve_bipartite_mis(const Graph& g, const TwoColoring& coloring);

} // namespace geoclique
