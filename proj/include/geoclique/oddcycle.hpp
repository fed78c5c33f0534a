#pragma once

#include <optional>
#include <vector>

#include "geoclique/graph.hpp"
#include "geoclique/parallel.hpp"

namespace geoclique {

/// Cyclically ordered vertices v_1..v_g of an odd cycle.
struct OddCycle {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
};

/// Shortest odd cycle, or nullopt iff g is bipartite.
///
/// For every start vertex v a BFS over the bipartite double cover
/// (vertex, parity) measures the shortest odd closed walk through v; the
/// global minimum such walk is a simple cycle. Ties go to the smallest start
/// vertex and to parents discovered first in increasing-id order.
std::optional<OddCycle> shortest_odd_cycle(const Graph& g, Exec exec = Exec::parallel);

/// Odd girth only (nullopt when bipartite); same kernel without extraction.
std::optional<int> odd_girth(const Graph& g, Exec exec = Exec::parallel);

/// Reduces an odd closed walk (first vertex not repeated at the end) to a
/// simple odd cycle by cutting out even detours at repeated vertices.
OddCycle reduce_odd_walk(std::vector<Vertex> walk);

/// Checks length odd and >= 3, distinct vertices, consecutive pairs adjacent
/// (cyclically) and, when `require_chordless`, no chord.
bool assert_valid_cycle(const Graph& g, const OddCycle& c, bool require_chordless = true);

} // namespace geoclique
