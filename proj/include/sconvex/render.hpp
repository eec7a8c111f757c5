#pragma once

// SVG figures of bodies on the sphere, seen along a view axis in
// orthographic or stereographic projection, with optional chord-net
// overlays (chords dashed, construction points as dots).

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "sconvex/approx.hpp"

namespace sconvex {

enum class Projection { Orthographic, Stereographic };

struct RenderOptions {
    Projection projection = Projection::Orthographic;
    std::optional<SpherePoint> view;  // defaults to the first body's interior point
    int arc_samples = 64;
    int size_px = 800;
};

struct Overlay {
    std::vector<std::pair<SpherePoint, SpherePoint>> chords;
    std::vector<SpherePoint> o, c, k, l;
};

inline Overlay overlay_from_net(const ChordNet& net) {
    Overlay ov;
    for (const Chord& ch : net.chords) ov.chords.emplace_back(ch.f, ch.g);
    ov.o = net.o;
    ov.c = net.c;
    ov.k = net.k;
    ov.l = net.l;
    return ov;
}

namespace detail {

struct Projector {
    TangentFrame frame;
    Projection kind;

    PlanePoint operator()(const SpherePoint& p) const {
        const Vec3& v = p.vec();
        const double h = dot(v, frame.n);
        if (kind == Projection::Orthographic) {
            if (h < 0.0) throw Error(ErrorCode::OutsideHemisphere, "point on the far side of the view");
            return {dot(v, frame.e1), dot(v, frame.e2)};
        }
        if (h <= -0.99) throw Error(ErrorCode::OutsideHemisphere, "point too close to the projection pole");
        return {dot(v, frame.e1) / (1.0 + h), dot(v, frame.e2) / (1.0 + h)};
    }
};

inline std::vector<SpherePoint> sample_boundary(const ConvexBody& body, int per_segment) {
    std::vector<SpherePoint> pts;
    for (const Segment& s : body.segments()) {
        for (int j = 0; j < per_segment; ++j) pts.push_back(s.point_at(static_cast<double>(j) / per_segment));
    }
    return pts;
}

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace detail

/// Polylines of each body boundary (arc_samples points per segment) in the
/// projection plane; exposed for structural checks on rendered output.
inline std::vector<std::vector<PlanePoint>> project_bodies(const std::vector<ConvexBody>& bodies,
                                                           const RenderOptions& opt) {
    if (bodies.empty()) return {};
    const SpherePoint view = opt.view.value_or(bodies.front().interior_point());
    const detail::Projector proj{tangent_frame(view), opt.projection};
    std::vector<std::vector<PlanePoint>> out;
    for (const ConvexBody& b : bodies) {
        std::vector<PlanePoint> line;
        for (const SpherePoint& p : detail::sample_boundary(b, opt.arc_samples)) line.push_back(proj(p));
        out.push_back(std::move(line));
    }
    return out;
}

inline std::string render_svg(const std::vector<ConvexBody>& bodies, const std::vector<Overlay>& overlays,
                              const RenderOptions& opt = {}) {
    if (bodies.empty()) throw Error(ErrorCode::DegenerateInput, "nothing to render");
    const SpherePoint view = opt.view.value_or(bodies.front().interior_point());
    const detail::Projector proj{tangent_frame(view), opt.projection};
    const auto lines = project_bodies(bodies, opt);

    struct Dash {
        std::vector<PlanePoint> pts;
    };
    std::vector<Dash> dashes;
    std::vector<std::pair<PlanePoint, const char*>> dots;
    for (const Overlay& ov : overlays) {
        for (const auto& [f, g] : ov.chords) {
            Dash d;
            for (int j = 0; j <= 16; ++j) d.pts.push_back(proj(arc_point(f, g, j / 16.0)));
            dashes.push_back(std::move(d));
        }
        for (const auto& [pts, color] : {std::pair{&ov.o, "#2ca02c"}, std::pair{&ov.c, "#d62728"},
                                         std::pair{&ov.k, "#9467bd"}, std::pair{&ov.l, "#8c564b"}}) {
            for (const SpherePoint& p : *pts) dots.emplace_back(proj(p), color);
        }
    }

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto grow = [&](const PlanePoint& q) {
        xmin = std::min(xmin, q.x);
        xmax = std::max(xmax, q.x);
        ymin = std::min(ymin, q.y);
        ymax = std::max(ymax, q.y);
    };
    for (const auto& l : lines) std::for_each(l.begin(), l.end(), grow);
    for (const auto& d : dashes) std::for_each(d.pts.begin(), d.pts.end(), grow);
    for (const auto& d : dots) grow(d.first);
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double margin = 20.0;
    const double scale = (opt.size_px - 2.0 * margin) / span;
    auto sx = [&](const PlanePoint& q) { return detail::fmt(margin + (q.x - xmin) * scale); };
    // SVG y grows downward
    auto sy = [&](const PlanePoint& q) { return detail::fmt(opt.size_px - margin - (q.y - ymin) * scale); };

    static const char* colors[] = {"#1f77b4", "#ff7f0e", "#17becf", "#e377c2", "#7f7f7f"};
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.size_px << "\" height=\""
       << opt.size_px << "\" viewBox=\"0 0 " << opt.size_px << " " << opt.size_px << "\">\n";
    for (std::size_t i = 0; i < lines.size(); ++i) {
        os << "  <path class=\"body\" fill=\"none\" stroke=\"" << colors[i % 5] << "\" stroke-width=\"1.5\" d=\"";
        for (std::size_t j = 0; j < lines[i].size(); ++j) {
            os << (j ? " L " : "M ") << sx(lines[i][j]) << " " << sy(lines[i][j]);
        }
        os << " Z\"/>\n";
    }
    for (const Dash& d : dashes) {
        os << "  <polyline class=\"chord\" fill=\"none\" stroke=\"#555555\" stroke-width=\"0.7\" "
              "stroke-dasharray=\"4 3\" points=\"";
        for (std::size_t j = 0; j < d.pts.size(); ++j) os << (j ? " " : "") << sx(d.pts[j]) << "," << sy(d.pts[j]);
        os << "\"/>\n";
    }
    for (const auto& [q, color] : dots) {
        os << "  <circle class=\"point\" cx=\"" << sx(q) << "\" cy=\"" << sy(q) << "\" r=\"2\" fill=\"" << color
           << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace sconvex
