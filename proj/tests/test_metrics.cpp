#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace sconvex;
using Catch::Matchers::WithinAbs;

TEST_CASE("point_to_body examples") {
    const GeneratedBody c = cap(0.3);
    REQUIRE(point_to_body(north_pole(), c.body) == 0.0);
    REQUIRE(point_to_body(polar_point(north_pole(), 0.29, 1.0), c.body) == 0.0);
    for (double az : {0.0, 1.0, 2.5, 4.0}) {
        REQUIRE_THAT(point_to_body(polar_point(north_pole(), 0.45, az), c.body), WithinAbs(0.15, 1e-12));
    }

    // beyond a Reuleaux vertex, on its axis: both adjacent arcs are equally near
    const GeneratedBody r = reuleaux(3, 1.0);
    const double rho = reuleaux_circumradius(3, 1.0);
    const SpherePoint p = polar_point(north_pole(), rho + 0.1, 0.0);
    REQUIRE_THAT(point_to_body(p, r.body), WithinAbs(0.1, 1e-12));

    // geodesic edges
    const std::vector<SpherePoint> tri{SpherePoint(1, 0, 0), SpherePoint(0, 1, 0), SpherePoint(0, 0, 1)};
    const ConvexBody oct = polygon(tri);
    REQUIRE_THAT(point_to_body(SpherePoint(1, 1, -0.2), oct), WithinAbs(std::asin(0.2 / std::sqrt(2.04)), 1e-12));
}

TEST_CASE("hausdorff of concentric caps") {
    const HausdorffResult h = hausdorff(cap(0.3).body, cap(0.35).body);
    REQUIRE_THAT(h.value, WithinAbs(0.05, 1e-6));
    REQUIRE_THAT(h.directed_ba, WithinAbs(0.05, 1e-6));
    REQUIRE(h.directed_ab == 0.0);
    REQUIRE(h.value == std::max(h.directed_ab, h.directed_ba));
    REQUIRE(h.resolution == 2048);
}

TEST_CASE("hausdorff is zero on identical bodies and symmetric") {
    const ConvexBody r = reuleaux(5, 1.2).body;
    REQUIRE(hausdorff(r, r).value == 0.0);
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 5; ++i) {
        std::vector<SpherePoint> a, b;
        for (int j = 0; j < 8; ++j) {
            a.push_back(polar_point(north_pole(), 0.5 * u(rng), 2 * pi * u(rng)));
            b.push_back(polar_point(north_pole(), 0.5 * u(rng), 2 * pi * u(rng)));
        }
        const ConvexBody A = spherical_hull(a);
        const ConvexBody B = spherical_hull(b);
        const double ab = hausdorff(A, B).value;
        REQUIRE(ab == hausdorff(B, A).value);
        // the oracle measures to sample points, so it can sit slightly above
        const double est = oracle::sampled_hausdorff(A, B, 400);
        REQUIRE_THAT(ab, WithinAbs(est, 1e-3));
    }
}

TEST_CASE("hausdorff is monotone under nesting") {
    const ConvexBody p = cap(0.2).body;
    const ConvexBody a = reuleaux(3, 0.6).body;
    const ConvexBody q = cap(0.5).body;
    REQUIRE(hausdorff(a, p).value <= hausdorff(q, p).value + 1e-7);
}
