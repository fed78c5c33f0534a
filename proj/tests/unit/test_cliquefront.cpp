#include <doctest.h>

#include <cmath>

#include "geoclique/cliquefront.hpp"
#include "geoclique/errors.hpp"
#include "geoclique/generators.hpp"
#include "geoclique/oracle.hpp"

using namespace geoclique;

namespace {

std::size_t omega(const GeometricInstance& inst) { return brute_force_max_clique(intersection_graph(inst).graph).size(); }

} // namespace

TEST_SUITE("cliquefront") {
    TEST_CASE("disks: small fixed instances") {
        EptasParams p;
        const auto three = GeometricInstance::from_balls(2, {{Point{0, 0}, 1.0}, {Point{1, 0}, 1.0}, {Point{0.5, 0.8}, 1.0}});
        auto s = max_clique_disks(three, p);
        CHECK(s.vertices.size() == 3u);
        CHECK(s.valid);
        std::vector<Ball> apart;
        for (int i = 0; i < 6; ++i) apart.push_back({Point{10.0 * i, 0}, 1.0});
        s = max_clique_disks(GeometricInstance::from_balls(2, apart), p);
        CHECK(s.vertices.size() == 1u);
        CHECK(s.branches == 6);
    }

    TEST_CASE("disks: wrong dimension") {
        EptasParams p;
        CHECK_THROWS_AS(max_clique_disks(GeometricInstance::from_balls(3, {{Point{0, 0, 0}, 1.0}}), p), PreconditionError);
    }

    TEST_CASE("unit balls: fixed instances") {
        EptasParams p;
        const auto k4 = GeometricInstance::from_points(
            3, {Point{0, 0, 0}, Point{0.5, 0, 0}, Point{0, 0.5, 0}, Point{0, 0, 0.5}}, 1.0);
        CHECK(max_clique_unit_balls(k4, p).vertices.size() == 4u);
        std::vector<Point> pts;
        for (int i = 0; i < 3; ++i) pts.push_back(Point{0.1 * i, 0, 0});
        for (int i = 0; i < 5; ++i) pts.push_back(Point{50.0 + 0.1 * i, 0, 0});
        const auto s = max_clique_unit_balls(GeometricInstance::from_points(3, pts, 1.0), p);
        CHECK(s.vertices == VertexSet{3, 4, 5, 6, 7});
    }

    TEST_CASE("unit balls: unequal radii need force") {
        EptasParams p;
        const auto inst = GeometricInstance::from_balls(3, {{Point{0, 0, 0}, 1.0}, {Point{1, 0, 0}, 2.0}});
        CHECK_THROWS_AS(max_clique_unit_balls(inst, p), Refusal);
        CHECK(max_clique_unit_balls(inst, p, true).vertices.size() == 2u);
    }

    TEST_CASE("diameter-one subsets") {
        EptasParams p;
        std::vector<Point> tight{Point{0, 0, 0}, Point{0.3, 0, 0}, Point{0, 0.3, 0}, Point{0, 0, 0.3}};
        CHECK(max_diameter_one_subset(tight, p).vertices.size() == 4u);
        std::vector<Point> far{Point{0, 0, 0}, Point{1.01, 0, 0}};
        const auto s = max_diameter_one_subset(far, p);
        CHECK(s.vertices.size() == 1u);
        CHECK(s.valid);
        std::vector<Point> flat{Point{0, 0}};
        CHECK_THROWS_AS(max_diameter_one_subset(flat, p), PreconditionError);
    }

    TEST_CASE("diameter-one matches subset enumeration") {
        EptasParams p;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto pts = gen_random_instance(RandomKind::points3d, 12, {1, 1, 1.5, 1.0}, seed).points;
            p.seed = seed;
            const auto s = max_diameter_one_subset(pts, p);
            std::size_t best = 0;
            for (unsigned mask = 1; mask < (1u << pts.size()); ++mask) {
                std::vector<Point> sub;
                for (std::size_t i = 0; i < pts.size(); ++i)
                    if (mask >> i & 1) sub.push_back(pts[i]);
                if (sub.size() > best && diameter(sub, Exec::serial) <= 1.0) best = sub.size();
            }
            CHECK(s.valid);
            CHECK(s.vertices.size() >= static_cast<std::size_t>(std::ceil(0.8 * best - 1e-9)));
        }
    }

    TEST_CASE("exact unit disk clique: fixed instances") {
        CHECK(exact_unit_disk_clique(std::vector<Point>{Point{3, 4}}, 1.0).vertices.size() == 1u);
        CHECK(exact_unit_disk_clique(std::vector<Point>{}, 1.0).vertices.empty());
        // Equilateral triangle with side 2r: pairwise tangent.
        const double h = std::sqrt(3.0);
        const auto s = exact_unit_disk_clique(std::vector<Point>{Point{0, 0}, Point{2, 0}, Point{1, h}}, 1.0);
        CHECK(s.vertices.size() == 3u);
        CHECK_THROWS_AS(exact_unit_disk_clique(std::vector<Point>{Point{0, 0}}, 0.0), PreconditionError);
    }

    TEST_CASE("exact unit disk clique matches brute force") {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const int n = 1 + static_cast<int>(seed % 18);
            const auto inst = gen_random_instance(RandomKind::points2d, n, {1, 1, 4.0, 2.0}, seed);
            const auto s = exact_unit_disk_clique(inst.points, 1.0);
            CHECK(s.valid);
            CHECK(s.vertices.size() == omega(inst));
            CHECK(s.vertices == exact_unit_disk_clique(inst.points, 1.0, Exec::serial).vertices);
        }
    }

    TEST_CASE("collinear points on the splitting line") {
        std::vector<Point> pts{Point{0, 0}, Point{0.5, 0}, Point{1, 0}, Point{1.5, 0}, Point{2, 0}, Point{1, 0.5}};
        const auto s = exact_unit_disk_clique(pts, 1.0);
        CHECK(s.vertices.size() == 6u);
    }

    TEST_CASE("disk EPTAS versus the exact baseline on equal radii") {
        EptasParams p;
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const auto pts = gen_random_instance(RandomKind::points2d, 16, {1, 1, 4.0, 2.0}, seed).points;
            std::vector<Ball> disks;
            for (const auto& c : pts) disks.push_back({c, 1.0});
            p.seed = seed;
            const auto approx = max_clique_disks(GeometricInstance::from_balls(2, disks), p);
            const auto exact = exact_unit_disk_clique(pts, 1.0);
            CHECK(approx.valid);
            CHECK(approx.vertices.size() >= static_cast<std::size_t>(std::ceil((1 - p.epsilon) * exact.vertices.size() - 1e-9)));
        }
    }

    TEST_CASE("frontends do not depend on the execution policy") {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            EptasParams p;
            p.seed = seed;
            const auto disks = gen_random_instance(RandomKind::disks2d, 18, {0.5, 1.5, 5.0, 1.0}, seed);
            const auto pts = gen_random_instance(RandomKind::points3d, 18, {1, 1, 1.6, 1.0}, seed);
            p.exec = Exec::serial;
            const auto a = max_clique_disks(disks, p);
            const auto c = max_clique_unit_balls(pts, p);
            p.exec = Exec::parallel;
            CHECK(a.vertices == max_clique_disks(disks, p).vertices);
            CHECK(c.vertices == max_clique_unit_balls(pts, p).vertices);
        }
    }
}
