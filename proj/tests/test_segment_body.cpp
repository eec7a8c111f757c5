#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace sconvex;
using Catch::Matchers::WithinAbs;

namespace {

const SpherePoint ex(1, 0, 0), ey(0, 1, 0), ez(0, 0, 1);

ConvexBody octant() { return polygon(std::vector<SpherePoint>{ex, ey, ez}); }

ConvexBody cap_body(double r) { return cap(r).body; }

}  // namespace

TEST_CASE("circle arc construction checks endpoints and sweep") {
    const SpherePoint a = polar_point(ez, 0.5, 0.0);
    const SpherePoint b = polar_point(ez, 0.5, half_pi);
    const Segment s = Segment::circle_arc(ez, 0.5, a, b);
    REQUIRE_THAT(s.sweep(), WithinAbs(half_pi, 1e-14));
    REQUIRE_THAT(s.length(), WithinAbs(std::sin(0.5) * half_pi, 1e-14));
    const Segment cw = Segment::circle_arc(ez, 0.5, a, b, false);
    REQUIRE_THAT(cw.sweep(), WithinAbs(-1.5 * pi, 1e-14));
    REQUIRE_THROWS_AS(Segment::circle_arc(ez, 0.6, a, b), Error);
    REQUIRE_THROWS_AS(Segment::geodesic(ex, SpherePoint(-1, 0, 0)), Error);
}

TEST_CASE("segment extrema agree with dense sampling") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 300; ++i) {
        const SpherePoint c = oracle::random_point(rng);
        const double r = 0.1 + 1.3 * u(rng);
        const double a0 = 2 * pi * u(rng);
        const double sw = 0.1 + 3.0 * u(rng);
        const Segment arc = Segment::circle_arc(c, r, polar_point(c, r, a0), polar_point(c, r, a0 + sw));
        const Segment geo = Segment::geodesic(oracle::random_point(rng), oracle::random_point(rng));
        const Vec3 k = oracle::random_point(rng).vec();
        for (const Segment* s : {&arc, &geo}) {
            double mx = -2, mn = 2;
            for (int j = 0; j <= 4000; ++j) {
                const double v = dot(s->point_at(j / 4000.0).vec(), k);
                mx = std::max(mx, v);
                mn = std::min(mn, v);
            }
            REQUIRE(s->max_dot(k).value >= mx - 1e-12);
            REQUIRE(s->max_dot(k).value <= mx + 1e-6);
            REQUIRE(s->min_dot(k).value <= mn + 1e-12);
            REQUIRE(s->min_dot(k).value >= mn - 1e-6);
        }
    }
}

TEST_CASE("boundary_point examples") {
    const ConvexBody c = cap_body(0.4);
    REQUIRE(c.boundary_point(0.0) == c.segment(0).start());
    const SpherePoint p0 = c.boundary_point(0.0);
    const SpherePoint half = c.boundary_point(0.5);
    // opposite across the center
    REQUIRE_THAT(dist(p0, half), WithinAbs(0.8, 1e-12));
    REQUIRE_THAT(c.perimeter(), WithinAbs(2 * pi * std::sin(0.4), 1e-12));
    const ConvexBody o = octant();
    REQUIRE_THAT(o.perimeter(), WithinAbs(1.5 * pi, 1e-12));
    REQUIRE(boundary_point(o, 0.0) == ex);
}

TEST_CASE("contains examples") {
    const ConvexBody o = octant();
    for (const auto& v : {ex, ey, ez}) REQUIRE(contains(o, v));
    REQUIRE(contains(o, SpherePoint(1, 1, 1)));
    REQUIRE_FALSE(contains(o, SpherePoint(-1, -1, -1)));
    REQUIRE_FALSE(contains(o, SpherePoint(-1, 1, 1)));

    const double r = 0.4;
    const ConvexBody c = cap_body(r);
    for (double az = 0; az < 2 * pi; az += 0.1) {
        REQUIRE(contains(c, polar_point(north_pole(), r / 2, az)));
        REQUIRE_FALSE(contains(c, polar_point(north_pole(), 2 * r, az)));
    }
}

TEST_CASE("boundary samples are contained and supported") {
    for (const ConvexBody& b : {octant(), cap_body(0.4), reuleaux(5, 1.2).body, quarter_disk(0.8).body}) {
        for (int i = 0; i < 1000; ++i) {
            const SpherePoint p = b.boundary_point(i / 1000.0);
            REQUIRE(contains(b, p));
            const SupportPair sp = supporting_poles_at(b, p);
            for (const auto* k : {&sp.right, &sp.left}) {
                REQUIRE(std::abs(dot(p, k->pole)) <= 1e-9);
                REQUIRE(std::asin(b.min_dot(k->pole.vec()).value) >= -1e-9);
            }
        }
    }
}

TEST_CASE("supporting poles examples") {
    const ConvexBody o = octant();
    const SupportPair mid = supporting_poles_at(o, arc_point(ex, ey, 0.3));
    REQUIRE(mid.right.pole == mid.left.pole);
    REQUIRE_THAT(dist(mid.left.pole, ez), WithinAbs(0.0, 1e-12));

    const double r = 0.4;
    const ConvexBody c = cap_body(r);
    const SpherePoint p = polar_point(north_pole(), r, 1.0);
    const SupportPair sp = supporting_poles_at(c, p);
    const Vec3 expected = (north_pole().vec() - p.vec() * std::cos(r)) / std::sin(r);
    REQUIRE_THAT(norm(sp.left.pole.vec() - expected), WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(dot(p, sp.left.pole), WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(dot(north_pole(), sp.left.pole), WithinAbs(std::sin(r), 1e-12));

    // at a polygon vertex every intermediate pole also supports
    const SupportPair v = supporting_poles_at(o, ez);
    REQUIRE_FALSE(v.right.pole == v.left.pole);
    for (int j = 0; j <= 20; ++j) {
        const SpherePoint k = arc_point(v.right.pole, v.left.pole, j / 20.0);
        REQUIRE(o.min_dot(k.vec()).value >= -1e-12);
    }
    REQUIRE_THROWS_MATCHES(supporting_poles_at(o, SpherePoint(1, 1, 1)), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::NotOnBoundary;
                           }));
}

TEST_CASE("is_convex examples") {
    REQUIRE(is_convex(octant()));
    const ConvexBody cw = polygon(std::vector<SpherePoint>{ey, ex, ez});
    const ConvexityReport r = is_convex(cw);
    REQUIRE_FALSE(r);
    REQUIRE_FALSE(r.violation.empty());

    // Reuleaux triangle with one arc traversed the other way round its circle
    const ConvexBody rt = reuleaux(3, 1.0).body;
    std::vector<Segment> segs(rt.segments().begin(), rt.segments().end());
    const Segment& s0 = segs[0];
    segs[0] = Segment::circle_arc(s0.center(), s0.radius(), s0.start(), s0.end(), false);
    REQUIRE_FALSE(is_convex(ConvexBody(segs)));
    REQUIRE_THROWS_AS(make_validated(segs), Error);
}

TEST_CASE("open chains are rejected") {
    REQUIRE_THROWS_AS(ConvexBody({Segment::geodesic(ex, ey), Segment::geodesic(ey, ez)}), Error);
}

TEST_CASE("split keeps the boundary") {
    const ConvexBody rt = reuleaux(3, 1.0).body;
    const ConvexBody s = rt.split(1, 0.25);
    REQUIRE(s.size() == 4);
    REQUIRE_THAT(s.perimeter(), WithinAbs(rt.perimeter(), 1e-12));
    REQUIRE(is_convex(s));
}

TEST_CASE("support curve covers all supporting poles") {
    const ConvexBody o = octant();
    const SupportCurve sc(o);
    // turning plus length: three right-angle fans and three quarter circles
    REQUIRE_THAT(sc.total(), WithinAbs(1.5 * pi + 1.5 * pi, 1e-12));
    for (int i = 0; i < 500; ++i) {
        const SupportSample s = sc.at(sc.total() * i / 500.0);
        REQUIRE(std::abs(dot(s.point, s.pole.pole)) <= 1e-12);
        REQUIRE(o.min_dot(s.pole.pole.vec()).value >= -1e-12);
    }
}
