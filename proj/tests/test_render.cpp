#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace sconvex;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("a Reuleaux triangle projects to one closed polyline") {
    const ConvexBody r = reuleaux(3, 1.0).body;
    const auto lines = project_bodies({r}, {});
    REQUIRE(lines.size() == 1);
    REQUIRE(lines[0].size() == 3 * 64);
    const std::string svg = render_svg({r}, {});
    REQUIRE(count(svg, "<path class=\"body\"") == 1);
    REQUIRE(count(svg, " Z\"") == 1);
    REQUIRE(svg.find("version=\"1.1\"") != std::string::npos);
}

TEST_CASE("projections differ in coordinates, not topology") {
    const ConvexBody r = reuleaux(5, 1.2).body;
    RenderOptions ortho;
    RenderOptions stereo;
    stereo.projection = Projection::Stereographic;
    const auto a = project_bodies({r}, ortho);
    const auto b = project_bodies({r}, stereo);
    REQUIRE(a[0].size() == b[0].size());
    double diff = 0.0;
    for (std::size_t i = 0; i < a[0].size(); ++i) {
        diff = std::max(diff, std::hypot(a[0][i].x - b[0][i].x, a[0][i].y - b[0][i].y));
    }
    REQUIRE(diff > 1e-3);
    REQUIRE(count(render_svg({r}, {}, stereo), "<path class=\"body\"") == 1);
}

TEST_CASE("input and approximation render with overlays") {
    const GeneratedBody g = reuleaux(3, 1.0);
    const ApproxResult res = approximate(g.body, *g.decomposition, 0.3, oracle::hinted(1.0));
    std::vector<Overlay> ov;
    std::size_t chords = 0;
    for (const ChordNet& n : res.nets) {
        ov.push_back(overlay_from_net(n));
        chords += n.size();
    }
    const std::string svg = render_svg({g.body, res.body}, ov);
    REQUIRE(count(svg, "<path class=\"body\"") == 2);
    REQUIRE(count(svg, "<polyline class=\"chord\"") == chords);
    REQUIRE(count(svg, "<circle class=\"point\"") > 0);
    // deterministic
    REQUIRE(render_svg({g.body, res.body}, ov) == svg);
}

TEST_CASE("bodies out of view are rejected") {
    const ConvexBody c = cap(0.4).body;
    RenderOptions opt;
    opt.view = SpherePoint(0, 0, -1);
    REQUIRE_THROWS_MATCHES(render_svg({c}, {}, opt), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == ErrorCode::OutsideHemisphere;
                           }));
    // stereographic only fails next to the projection pole
    opt.projection = Projection::Stereographic;
    REQUIRE_NOTHROW(render_svg({c}, {}, opt));
    REQUIRE_THROWS_AS(render_svg({cap(0.1).body}, {}, opt), Error);
    REQUIRE_THROWS_AS(render_svg({}, {}), Error);
}
