#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace sconvex;
using Catch::Matchers::WithinAbs;

TEST_CASE("hull of the octant points is the octant triangle") {
    const std::vector<SpherePoint> pts{SpherePoint(0, 1, 0), SpherePoint(1, 0, 0), SpherePoint(0, 0, 1)};
    const auto v = spherical_hull_vertices(pts);
    REQUIRE(v.size() == 3);
    const ConvexBody h = spherical_hull(pts);
    REQUIRE(is_convex(h));
    REQUIRE_THAT(h.perimeter(), WithinAbs(1.5 * pi, 1e-12));
}

TEST_CASE("interior points are dropped") {
    const SpherePoint c(0, 0, 1);
    std::vector<SpherePoint> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(polar_point(c, 0.3, i * half_pi));
    pts.push_back(c);
    const auto v = spherical_hull_vertices(pts);
    REQUIRE(v.size() == 4);
    for (const auto& p : v) REQUIRE_FALSE(p == c);
}

TEST_CASE("random points lie in their hull, and the hull is idempotent") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        const SpherePoint c = oracle::random_point(rng);
        std::vector<SpherePoint> pts;
        for (int i = 0; i < 100; ++i) pts.push_back(polar_point(c, 0.5 * std::sqrt(u(rng)), 2 * pi * u(rng)));
        const ConvexBody h = spherical_hull(pts);
        REQUIRE(is_convex(h));
        for (const auto& p : pts) REQUIRE(contains(h, p));

        const auto v1 = spherical_hull_vertices(pts);
        const auto v2 = spherical_hull_vertices(v1);
        REQUIRE(v1.size() == v2.size());
        // same cycle up to rotation
        std::size_t off = 0;
        while (off < v2.size() && dist(v2[off], v1[0]) > 1e-10) ++off;
        REQUIRE(off < v2.size());
        for (std::size_t i = 0; i < v1.size(); ++i) REQUIRE(dist(v1[i], v2[(i + off) % v2.size()]) <= 1e-10);
    }
}

TEST_CASE("hull errors") {
    const std::vector<SpherePoint> spread{SpherePoint(1, 0, 0), SpherePoint(-1, 0, 0), SpherePoint(0, 1, 0),
                                          SpherePoint(0, -1, 0), SpherePoint(0, 0, 1), SpherePoint(0, 0, -1)};
    REQUIRE_THROWS_MATCHES(spherical_hull(spread), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::NoCommonHemisphere;
                           }));
    const std::vector<SpherePoint> line{SpherePoint(1, 0, 0), SpherePoint(1, 1, 0), SpherePoint(0, 1, 0)};
    REQUIRE_THROWS_MATCHES(spherical_hull(line), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::DegenerateInput;
                           }));
}
