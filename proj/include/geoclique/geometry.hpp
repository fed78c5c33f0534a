#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "geoclique/graph.hpp"
#include "geoclique/parallel.hpp"

namespace geoclique {

inline constexpr int kMaxDim = 4;

/// Point of R^d, d in {1..4}. Coordinates past `dim` are zero.
struct Point {
    std::array<double, kMaxDim> x{};
    int dim = 0;

    Point() = default;
    Point(std::initializer_list<double> coords);
    static Point of_dim(int dim);

    double operator[](int i) const { return x[i]; }
    double& operator[](int i) { return x[i]; }
    bool operator==(const Point&) const = default;
};

/// Closed ball (disk when d = 2).
struct Ball {
    Point center;
    double radius = 0.0;
    bool operator==(const Ball&) const = default;
};

enum class InstanceKind { balls, points };

/// Either a set of closed balls, or a point set with a distance threshold
/// (two points adjacent iff their distance is at most the threshold).
struct GeometricInstance {
    int dim = 2;
    InstanceKind kind = InstanceKind::balls;
    std::vector<Ball> balls;
    std::vector<Point> points;
    double threshold = 0.0;
    std::vector<double> weights;

    std::size_t size() const { return kind == InstanceKind::balls ? balls.size() : points.size(); }
    const Point& center(std::size_t i) const {
        return kind == InstanceKind::balls ? balls[i].center : points[i];
    }
    /// Distance at or below which i and j are adjacent.
    double pair_threshold(std::size_t i, std::size_t j) const {
        return kind == InstanceKind::balls ? balls[i].radius + balls[j].radius : threshold;
    }
    /// True when every ball has the same radius (always true in point mode).
    bool equal_radii() const;

    /// Throws MalformedInput on mixed dimensions, non-finite coordinates,
    /// negative radii or a non-positive threshold.
    void validate() const;

    bool operator==(const GeometricInstance&) const = default;

    static GeometricInstance from_balls(int dim, std::vector<Ball> balls);
    static GeometricInstance from_points(int dim, std::vector<Point> points, double threshold);
};

inline constexpr double kDefaultMargin = 1e-9;

/// Pair whose distance lies within the margin of its adjacency threshold.
struct NearTie {
    Vertex u = 0;
    Vertex v = 0;
    double distance = 0.0;
    double threshold = 0.0;
};

struct IntersectionGraph {
    Graph graph;
    /// Pairs that were decided within +-margin of the threshold; the edge
    /// decision itself uses the exact squared-distance comparison.
    std::vector<NearTie> near_ties;
};

double distance(const Point& a, const Point& b);
double squared_distance(const Point& a, const Point& b);

/// Maximum pairwise distance; 0 for a single point. Throws on empty input.
double diameter(std::span<const Point> points, Exec exec = Exec::parallel);

/// Edge iff d(c_u, c_v) <= r_u + r_v (ball mode) or d(p_u, p_v) <= threshold
/// (point mode). Tangent closed objects intersect.
IntersectionGraph intersection_graph(const GeometricInstance& inst, double margin = kDefaultMargin,
                                     Exec exec = Exec::parallel);

/// Subset of the instance selected by `ids`, in that order.
GeometricInstance sub_instance(const GeometricInstance& inst, std::span<const Vertex> ids);

} // namespace geoclique
