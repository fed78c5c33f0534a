#include "geoclique/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geoclique/errors.hpp"

namespace geoclique {

Point::Point(std::initializer_list<double> coords) : dim(static_cast<int>(coords.size())) {
    if (coords.size() > kMaxDim) throw PreconditionError("Point: more than 4 coordinates");
    std::copy(coords.begin(), coords.end(), x.begin());
}

Point Point::of_dim(int dim) {
    if (dim < 1 || dim > kMaxDim) throw PreconditionError("Point: dimension must be in 1..4");
    Point p;
    p.dim = dim;
    return p;
}

double squared_distance(const Point& a, const Point& b) {
    if (a.dim != b.dim) throw PreconditionError("distance: dimension mismatch");
    double sum = 0.0;
    for (int i = 0; i < a.dim; ++i) {
        double d = a.x[i] - b.x[i];
        sum += d * d;
    }
    return sum;
}

double distance(const Point& a, const Point& b) { return std::sqrt(squared_distance(a, b)); }

bool GeometricInstance::equal_radii() const {
    if (kind == InstanceKind::points || balls.empty()) return true;
    return std::all_of(balls.begin(), balls.end(),
                       [&](const Ball& b) { return b.radius == balls.front().radius; });
}

void GeometricInstance::validate() const {
    if (dim < 1 || dim > kMaxDim) throw MalformedInput("instance dimension must be in 1..4");
    auto check_point = [&](const Point& p, std::size_t i) {
        if (p.dim != dim)
            throw MalformedInput("object " + std::to_string(i) + " has dimension " + std::to_string(p.dim) +
                                 ", instance has " + std::to_string(dim));
        for (int k = 0; k < dim; ++k)
            if (!std::isfinite(p.x[k])) throw MalformedInput("non-finite coordinate in object " + std::to_string(i));
    };
    if (kind == InstanceKind::balls) {
        for (std::size_t i = 0; i < balls.size(); ++i) {
            check_point(balls[i].center, i);
            if (!std::isfinite(balls[i].radius) || balls[i].radius < 0)
                throw MalformedInput("ball " + std::to_string(i) + " has invalid radius");
        }
    } else {
        for (std::size_t i = 0; i < points.size(); ++i) check_point(points[i], i);
        if (!std::isfinite(threshold) || threshold <= 0) throw MalformedInput("threshold must be positive");
    }
    if (!weights.empty()) {
        if (weights.size() != size()) throw MalformedInput("weights length does not match object count");
        for (double w : weights)
            if (!std::isfinite(w) || w < 0) throw MalformedInput("weights must be finite and >= 0");
    }
}

GeometricInstance GeometricInstance::from_balls(int dim, std::vector<Ball> balls) {
    GeometricInstance inst;
    inst.dim = dim;
    inst.kind = InstanceKind::balls;
    inst.balls = std::move(balls);
    inst.validate();
    return inst;
}

GeometricInstance GeometricInstance::from_points(int dim, std::vector<Point> points, double threshold) {
    GeometricInstance inst;
    inst.dim = dim;
    inst.kind = InstanceKind::points;
    inst.points = std::move(points);
    inst.threshold = threshold;
    inst.validate();
    return inst;
}

double diameter(std::span<const Point> points, Exec exec) {
    if (points.empty()) throw PreconditionError("diameter: empty point list");
    const long n = static_cast<long>(points.size());
    double best = 0.0;
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16) reduction(max : best)
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j) best = std::max(best, squared_distance(points[i], points[j]));
    } else {
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j) best = std::max(best, squared_distance(points[i], points[j]));
    }
    return std::sqrt(best);
}

namespace {

struct RowResult {
    std::vector<Vertex> neighbors;
    std::vector<NearTie> ties;
};

void scan_row(const GeometricInstance& inst, long i, double margin, RowResult& out) {
    const long n = static_cast<long>(inst.size());
    const Point& a = inst.center(i);
    for (long j = i + 1; j < n; ++j) {
        const double thr = inst.pair_threshold(i, j);
        const double d2 = squared_distance(a, inst.center(j));
        if (d2 <= thr * thr) out.neighbors.push_back(static_cast<Vertex>(j));
        const double lo = std::max(0.0, thr - margin);
        const double hi = thr + margin;
        if (d2 >= lo * lo && d2 <= hi * hi)
            out.ties.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), std::sqrt(d2), thr});
    }
}

} // namespace

IntersectionGraph intersection_graph(const GeometricInstance& inst, double margin, Exec exec) {
    inst.validate();
    const long n = static_cast<long>(inst.size());
    std::vector<RowResult> rows(n);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < n; ++i) scan_row(inst, i, margin, rows[i]);
    } else {
        for (long i = 0; i < n; ++i) scan_row(inst, i, margin, rows[i]);
    }
    IntersectionGraph out;
    std::vector<Edge> edges;
    for (long i = 0; i < n; ++i) {
        for (Vertex j : rows[i].neighbors) edges.emplace_back(static_cast<Vertex>(i), j);
        out.near_ties.insert(out.near_ties.end(), rows[i].ties.begin(), rows[i].ties.end());
    }
    out.graph = Graph::from_edge_list(static_cast<int>(n), edges);
    if (!inst.weights.empty()) out.graph = out.graph.with_weights(inst.weights);
    return out;
}

GeometricInstance sub_instance(const GeometricInstance& inst, std::span<const Vertex> ids) {
    GeometricInstance out;
    out.dim = inst.dim;
    out.kind = inst.kind;
    out.threshold = inst.threshold;
    for (Vertex v : ids) {
        if (inst.kind == InstanceKind::balls)
            out.balls.push_back(inst.balls[v]);
        else
            out.points.push_back(inst.points[v]);
        if (!inst.weights.empty()) out.weights.push_back(inst.weights[v]);
    }
    return out;
}

} // namespace geoclique
