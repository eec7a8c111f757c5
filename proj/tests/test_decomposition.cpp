#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace sconvex;
using Catch::Matchers::WithinAbs;

namespace {

/// Every boundary segment belongs to exactly one feature.
void require_tiling(const ConvexBody& body, const Decomposition& dec) {
    std::vector<int> owners(body.size(), 0);
    for (const Feature& f : dec.features) {
        if (const auto* a = std::get_if<ArmFeature>(&f)) {
            for (std::size_t s : a->segments) ++owners.at(s);
        } else {
            const auto& p = std::get<CwPair>(f);
            for (std::size_t s : p.f_segments) ++owners.at(s);
            for (std::size_t s : p.g_segments) ++owners.at(s);
            REQUIRE((p.f_segments.empty() == p.f_vertex.has_value()));
            REQUIRE((p.g_segments.empty() == p.g_vertex.has_value()));
        }
    }
    for (std::size_t i = 0; i < owners.size(); ++i) {
        INFO("segment " << i);
        REQUIRE(owners[i] == 1);
    }
}

/// The far ends of chords move forward along the boundary as f does.
void require_monotone_chords(const ConvexBody& body, const CwPair& pair) {
    const SupportCurve sc(body);
    const PairRange r = pair_range(sc, pair);
    const double per = body.perimeter();
    double prev = -1.0;
    double start = -1.0;
    for (int i = 0; i <= 200; ++i) {
        const Chord c = chord_at(sc, r.u0 + (r.u1 - r.u0) * i / 200.0);
        const auto loc = body.locate(c.g, 1e-7);
        REQUIRE(loc.has_value());
        double s = body.offset(loc->segment) + loc->t * body.segment(loc->segment).length();
        if (start < 0.0) start = s;
        s -= start;
        if (s < -1e-9) s += per;
        if (s > per - 1e-9) s -= per;
        REQUIRE(s >= prev - 1e-9);
        prev = s;
    }
}

}  // namespace

TEST_CASE("Reuleaux triangle decomposes into one pair covering the boundary") {
    const GeneratedBody r = reuleaux(3, 1.0);
    REQUIRE(r.decomposition.has_value());
    const Decomposition& dec = *r.decomposition;
    REQUIRE(dec.features.size() == 1);
    REQUIRE_FALSE(dec.trivial());
    const CwPair p = dec.pairs().front();
    require_tiling(r.body, dec);
    REQUIRE(pair_is_consistent(r.body, p, 1.0));
    require_monotone_chords(r.body, p);
    // the pair starts with the chord through the start of segment 0
    REQUIRE(p.f_segments.front() == 0);
}

TEST_CASE("cap decomposes into one pair") {
    const GeneratedBody c = cap(0.4);
    REQUIRE(c.decomposition.has_value());
    REQUIRE(c.decomposition->pairs().size() == 1);
    require_tiling(c.body, *c.decomposition);
    const CwPair p = c.decomposition->pairs().front();
    REQUIRE(pair_is_consistent(c.body, p, 0.8));
    require_monotone_chords(c.body, p);
}

TEST_CASE("decompose is consistent on several constant-width bodies") {
    std::mt19937_64 rng(51);
    for (int n : {3, 5, 7, 9}) {
        const SpherePoint center = oracle::random_point(rng);
        const GeneratedBody r = reuleaux(n, 0.7, center);
        require_tiling(r.body, *r.decomposition);
        for (const CwPair& p : r.decomposition->pairs()) {
            REQUIRE(pair_is_consistent(r.body, p, 0.7));
            require_monotone_chords(r.body, p);
        }
    }
}

TEST_CASE("quarter disk decomposition tiles the boundary") {
    const GeneratedBody q = quarter_disk(0.5);
    REQUIRE(q.decomposition.has_value());
    require_tiling(q.body, *q.decomposition);
    const auto pairs = q.decomposition->pairs();
    REQUIRE_FALSE(pairs.empty());
    for (const CwPair& p : pairs) REQUIRE(pair_is_consistent(q.body, p, q.delta));
    // the arc is paired with the center vertex
    const CwPair& p = pairs.front();
    REQUIRE(p.g_vertex.has_value());
    REQUIRE_THAT(dist(q.body.segment(*p.g_vertex).start(), north_pole()), WithinAbs(0.0, 1e-12));
}

TEST_CASE("generic polygons are not reduced") {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<SpherePoint> pts;
        for (int i = 0; i < 6; ++i) pts.push_back(polar_point(north_pole(), 0.2 + 0.3 * u(rng), 2 * pi * u(rng)));
        const ConvexBody body = polygon(spherical_hull_vertices(pts));
        try {
            const Decomposed d = decompose(body);
            REQUIRE(d.decomposition.trivial());
            require_tiling(d.body, d.decomposition);
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::DecompositionFailed);
        }
    }
}

TEST_CASE("butterfly arms cross at the center") {
    const SpherePoint a1 = polar_point(north_pole(), 0.3, 0.0);
    const SpherePoint a2 = polar_point(north_pole(), 0.3, pi);
    const SpherePoint b1 = polar_point(north_pole(), 0.3, half_pi);
    const SpherePoint b2 = polar_point(north_pole(), 0.3, 1.5 * pi);
    const Butterfly b = make_butterfly(Segment::geodesic(a1, a2), Segment::geodesic(b1, b2));
    REQUIRE_THAT(dist(b.center, north_pole()), WithinAbs(0.0, 1e-12));
}
