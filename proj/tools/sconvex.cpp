// Command-line driver: generate bodies, measure thickness, run the
// approximation, verify, compare and render.
//
// Exit codes: 0 success, 1 a requested check failed, 2 usage or validation
// error, 3 the approximation certificate failed.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sconvex/sconvex.hpp"

namespace {

using namespace sconvex;

constexpr int exit_ok = 0;
constexpr int exit_check = 1;
constexpr int exit_usage = 2;
constexpr int exit_certificate = 3;

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        write_text_file(path, text);
    }
}

SpherePoint parse_vector(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
    if (v.size() != 3) throw Error(ErrorCode::ParseError, "expected three comma-separated numbers, got '" + s + "'");
    return SpherePoint(v[0], v[1], v[2]);
}

Overlay overlay_from_json(const Json& net) {
    auto point = [](const Json& j) { return SpherePoint(j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()); };
    Overlay ov;
    for (const Json& c : net.at("chords")) ov.chords.emplace_back(point(c.at("f")), point(c.at("g")));
    for (const auto& [key, dst] : {std::pair{"o", &ov.o}, std::pair{"c", &ov.c}, std::pair{"k", &ov.k},
                                   std::pair{"l", &ov.l}}) {
        for (const Json& p : net.at(key)) dst->push_back(point(p));
    }
    return ov;
}

struct GenArgs {
    std::string kind;
    int sides = 3;
    double width = 1.0;
    double radius = 0.4;
    std::string center;
    std::string out;
};

int cmd_gen(const GenArgs& a) {
    const SpherePoint center = a.center.empty() ? north_pole() : parse_vector(a.center);
    GeneratedBody g = [&] {
        if (a.kind == "reuleaux") return reuleaux(a.sides, a.width, center);
        if (a.kind == "cap") return cap(center, a.radius);
        return quarter_disk(a.radius, center);
    }();
    BodyFile f{g.body, g.decomposition, {}};
    f.metadata.thickness = g.delta;
    f.metadata.generator = a.kind;
    if (a.kind == "reuleaux") {
        f.metadata.parameters = {{"sides", a.sides}, {"width", a.width}};
    } else {
        f.metadata.parameters = {{"radius", a.radius}};
    }
    if (!a.center.empty()) f.metadata.parameters["center"] = Json::array({center.x(), center.y(), center.z()});
    emit(save_body(f), a.out);
    return exit_ok;
}

int cmd_thickness(const std::string& path) {
    const BodyFile f = load_body_file(path);
    const ThicknessResult t = thickness(f.body);
    const Json j = {{"thickness", t.delta},
                    {"chord", {{"f", {t.chord.f.x(), t.chord.f.y(), t.chord.f.z()}},
                               {"g", {t.chord.g.x(), t.chord.g.y(), t.chord.g.z()}}}}};
    std::cout << canonical_dump(j);
    return exit_ok;
}

struct ApproxArgs {
    std::string input;
    double eps = 0.0;
    std::string out;
    std::string report;
};

int cmd_approximate(const ApproxArgs& a) {
    if (!(a.eps > 0.0 && a.eps < half_pi)) {
        throw Error(ErrorCode::EpsOutOfRange, "eps must be < pi/2 and positive");
    }
    const std::string text = read_text_file(a.input);
    const BodyFile in = load_body(text);
    Decomposition dec;
    if (in.decomposition) {
        dec = *in.decomposition;
    } else {
        // fall back to tracing the structure numerically
        dec = decompose(in.body).decomposition;
    }

    if (dec.trivial()) {
        emit(text, a.out);
        ApproxReport rep;
        rep.eps = a.eps;
        rep.delta_in = rep.delta_out = thickness(in.body).delta;
        rep.certificate_holds = true;
        if (!a.report.empty()) write_text_file(a.report, canonical_dump(report_to_json(rep, {}, true)));
        std::cerr << "trivial decomposition: output equals input\n";
        return exit_ok;
    }

    ApproxOptions opt;
    opt.delta_hint = in.metadata.thickness;
    const ApproxResult r = approximate(in.body, dec, a.eps, opt);

    BodyFile out{r.body, std::nullopt, {}};
    try {
        out.decomposition = decompose(r.body).decomposition;
    } catch (const Error&) {
        // the output is still valid; it just carries no decomposition
    }
    out.metadata.thickness = r.report.delta_in;
    out.metadata.generator = "approximate";
    out.metadata.parameters = {{"eps", a.eps}};
    if (!in.metadata.generator.empty()) out.metadata.parameters["source"] = in.metadata.generator;
    emit(save_body(out), a.out);

    const std::string report = canonical_dump(report_to_json(r.report, r.nets, false));
    if (!a.report.empty()) write_text_file(a.report, report);
    if (!r.report.certificate_holds) {
        for (const auto& why : r.report.certificate_failures) std::cerr << "certificate: " << why << "\n";
        return exit_certificate;
    }
    return exit_ok;
}

struct VerifyArgs {
    std::string input;
    bool constant_width = false;
    std::optional<double> thickness;
    double tol = 1e-6;
};

int cmd_verify(const VerifyArgs& a) {
    const BodyFile f = load_body_file(a.input, false);
    bool ok = true;
    Json j = Json::object();
    const ConvexityReport conv = is_convex(f.body);
    j["convex"] = conv.convex;
    if (!conv) {
        j["convexity_violation"] = conv.violation;
        std::cout << canonical_dump(j);
        return exit_check;
    }
    const double delta = thickness(f.body).delta;
    j["thickness"] = delta;
    if (a.thickness) {
        const double dev = std::abs(delta - *a.thickness);
        j["thickness_deviation"] = dev;
        ok = ok && dev <= a.tol;
    }
    if (a.constant_width) {
        const ConstantWidthReport cw = is_constant_width(f.body, a.tol);
        j["constant_width_deviation"] = cw.max_deviation;
        j["constant_width"] = cw.constant;
        ok = ok && cw.constant;
    }
    j["pass"] = ok;
    std::cout << canonical_dump(j);
    return ok ? exit_ok : exit_check;
}

int cmd_hausdorff(const std::string& a, const std::string& b, int samples) {
    if (samples < 64) throw Error(ErrorCode::OutOfDomain, "at least 64 samples are required");
    const HausdorffResult h = hausdorff(load_body_file(a).body, load_body_file(b).body, samples);
    const Json j = {{"hausdorff", h.value},
                    {"directed_ab", h.directed_ab},
                    {"directed_ba", h.directed_ba},
                    {"samples", h.resolution}};
    std::cout << canonical_dump(j);
    return exit_ok;
}

struct RenderArgs {
    std::vector<std::string> inputs;
    std::string projection = "orthographic";
    std::string view;
    std::string out;
    std::string report;
    int arc_samples = 64;
};

int cmd_render(const RenderArgs& a) {
    RenderOptions opt;
    opt.projection = a.projection == "stereographic" ? Projection::Stereographic : Projection::Orthographic;
    if (!a.view.empty()) opt.view = parse_vector(a.view);
    opt.arc_samples = a.arc_samples;
    std::vector<ConvexBody> bodies;
    for (const auto& p : a.inputs) bodies.push_back(load_body_file(p).body);
    std::vector<Overlay> overlays;
    if (!a.report.empty()) {
        const Json rep = Json::parse(read_text_file(a.report));
        for (const Json& n : rep.value("nets", Json::array())) overlays.push_back(overlay_from_json(n));
    }
    emit(render_svg(bodies, overlays, opt), a.out);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spherical reduced bodies: generation, thickness and approximation by arcs"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Write a generated body");
    g->add_option("kind", gen.kind, "reuleaux | cap | quarter-disk")
        ->required()
        ->check(CLI::IsMember({"reuleaux", "cap", "quarter-disk"}));
    g->add_option("--sides", gen.sides, "Number of sides (odd, reuleaux)");
    g->add_option("--width", gen.width, "Width in radians (reuleaux)");
    g->add_option("--radius", gen.radius, "Radius in radians (cap, quarter-disk)");
    g->add_option("--center", gen.center, "Center as x,y,z");
    g->add_option("-o,--output", gen.out, "Output file (default stdout)");

    std::string thick_in;
    auto* th = app.add_subcommand("thickness", "Print the thickness and a realizing chord");
    th->add_option("input", thick_in)->required();

    ApproxArgs ap;
    auto* apx = app.add_subcommand("approximate", "Replace constant-width curves by arcs of radius equal to the thickness");
    apx->add_option("input", ap.input)->required();
    apx->add_option("--eps", ap.eps, "Hausdorff tolerance in radians")->required();
    apx->add_option("-o,--output", ap.out, "Output body file (default stdout)");
    apx->add_option("--report", ap.report, "Report JSON path");

    VerifyArgs vf;
    auto* ver = app.add_subcommand("verify", "Check convexity, thickness and constant width");
    ver->add_option("input", vf.input)->required();
    ver->add_flag("--constant-width", vf.constant_width);
    ver->add_option("--thickness", vf.thickness, "Expected thickness");
    ver->add_option("--tol", vf.tol, "Tolerance for the checks");

    std::string ha, hb;
    int samples = 2048;
    auto* hd = app.add_subcommand("hausdorff", "Hausdorff distance between two bodies");
    hd->add_option("a", ha)->required();
    hd->add_option("b", hb)->required();
    hd->add_option("--samples", samples, "Boundary samples per body");

    RenderArgs rd;
    auto* rn = app.add_subcommand("render", "Draw bodies as SVG");
    rn->add_option("inputs", rd.inputs)->required();
    rn->add_option("--projection", rd.projection)->check(CLI::IsMember({"orthographic", "stereographic"}));
    rn->add_option("--view", rd.view, "View axis as x,y,z");
    rn->add_option("-o,--output", rd.out)->required();
    rn->add_option("--report", rd.report, "Approximation report whose chord nets are overlaid");
    rn->add_option("--arc-samples", rd.arc_samples, "Polyline points per segment")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*g) return cmd_gen(gen);
        if (*th) return cmd_thickness(thick_in);
        if (*apx) return cmd_approximate(ap);
        if (*ver) return cmd_verify(vf);
        if (*hd) return cmd_hausdorff(ha, hb, samples);
        if (*rn) return cmd_render(rd);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::CertificateFailed ? exit_certificate : exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
