#pragma once

#include <span>
#include <string>

#include "geoclique/eptas.hpp"
#include "geoclique/geometry.hpp"

namespace geoclique {

struct CliqueSolution {
    VertexSet vertices;
    double weight = 0.0;
    std::string method;
    /// Set only after the vertices were checked pairwise against the graph.
    bool valid = false;
    double epsilon = 0.0;
    double beta = 0.0;
    /// Branches (guessed vertices) that ran the EPTAS, and those skipped by
    /// the weight bound.
    int branches = 0;
    int pruned = 0;
    /// Counters summed over every branch; best_* fields come from the
    /// winning branch.
    EptasDiagnostics diagnostics;
    /// Degenerate center pairs whose side split was not a clique pair under
    /// floating point and needed the general exact solver.
    int degenerate_pairs = 0;
};

/// Marks `s.valid` after checking that s.vertices is a clique of g.
CliqueSolution& certify(CliqueSolution& s, const Graph& g);

/// Disk graphs: chain of branches along a min-degree elimination order. The
/// branch for v solves the complement of G[N[v]] in what remains of the graph
/// (beta = 1/6, d = 4). Requires a 2-d ball instance.
CliqueSolution max_clique_disks(const GeometricInstance& inst, const EptasParams& p);

/// Unit balls (or a point set with a threshold): for each v, the complement
/// of G[N(v)] with beta = 1/25, d = 4, plus v. Unequal radii throw Refusal
/// unless `force`.
CliqueSolution max_clique_unit_balls(const GeometricInstance& inst, const EptasParams& p, bool force = false);

/// Largest subset of 3-d points with diameter at most 1.
CliqueSolution max_diameter_one_subset(std::span<const Point> points, const EptasParams& p);

/// Exact clique of the unit disk graph with radius r (centers adjacent iff
/// distance <= 2r), by guessing the farthest pair of a maximum clique.
CliqueSolution exact_unit_disk_clique(std::span<const Point> points, double r, Exec exec = Exec::parallel);

} // namespace geoclique
