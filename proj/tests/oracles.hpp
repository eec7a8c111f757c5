#pragma once

// Test-only reference computations. They avoid the library's closed-form
// extremum code and instead work from dense samples and direct definitions,
// so agreement with the library is meaningful.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "sconvex/sconvex.hpp"

namespace oracle {

using sconvex::SpherePoint;
using sconvex::Vec3;

inline Vec3 unit(const Vec3& v) { return v / sconvex::norm(v); }

inline double angle_between(const Vec3& a, const Vec3& b) {
    // half-chord formula, independent of the atan2 form used by the library
    const double c = sconvex::norm(unit(a) - unit(b));
    return 2.0 * std::asin(std::min(1.0, c / 2.0));
}

/// Dense boundary samples of a body (arclength-uniform per segment).
inline std::vector<Vec3> boundary_samples(const sconvex::ConvexBody& body, int per_segment) {
    std::vector<Vec3> pts;
    for (const auto& s : body.segments()) {
        for (int j = 0; j < per_segment; ++j) pts.push_back(s.point_at(static_cast<double>(j) / per_segment).vec());
    }
    return pts;
}

/// Width of a convex geodesic polygon for the supporting hemisphere with
/// pole k, by direct minimization of lune thickness pi - angle(k, h) over
/// hemispheres H containing the polygon. The optimal H supports the polygon
/// at a vertex, so candidate poles are swept through every vertex fan and
/// each fan is minimized by golden section.
inline double polygon_width(const std::vector<Vec3>& verts, const Vec3& k, int fan_samples = 400) {
    const std::size_t n = verts.size();
    auto contains_all = [&](const Vec3& h) {
        return std::all_of(verts.begin(), verts.end(), [&](const Vec3& v) { return sconvex::dot(v, h) >= -1e-9; });
    };
    auto edge_normal = [&](std::size_t i) { return unit(sconvex::cross(verts[i], verts[(i + 1) % n])); };
    auto fan_pole = [&](std::size_t i, double t) {
        const Vec3 a = edge_normal((i + n - 1) % n);
        const Vec3 b = edge_normal(i);
        const double th = angle_between(a, b);
        if (th < 1e-15) return a;
        return unit(a * std::sin((1 - t) * th) + b * std::sin(t * th));
    };
    auto thick = [&](const Vec3& h) { return sconvex::pi - angle_between(k, h); };

    double best = sconvex::pi;
    for (std::size_t i = 0; i < n; ++i) {
        for (int j = 0; j <= fan_samples; ++j) {
            const Vec3 h = fan_pole(i, static_cast<double>(j) / fan_samples);
            if (contains_all(h)) best = std::min(best, thick(h));
        }
    }
    // along one fan the angle to k is unimodal, so golden section over the
    // whole fan finds its minimum; the dense sweep above guards the result
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    for (std::size_t i = 0; i < n; ++i) {
        double lo = 0.0;
        double hi = 1.0;
        for (int it = 0; it < 80; ++it) {
            const double c = hi - r * (hi - lo);
            const double d = lo + r * (hi - lo);
            if (thick(fan_pole(i, c)) <= thick(fan_pole(i, d))) {
                hi = d;
            } else {
                lo = c;
            }
        }
        best = std::min(best, thick(fan_pole(i, 0.5 * (lo + hi))));
    }
    return best;
}

/// Thickness of a polygon as the minimum of polygon_width over supporting
/// poles swept through every vertex fan.
inline double polygon_thickness(const std::vector<Vec3>& verts, int fan_samples = 100) {
    const std::size_t n = verts.size();
    double best = sconvex::pi;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 a = unit(sconvex::cross(verts[(i + n - 1) % n], verts[i]));
        const Vec3 b = unit(sconvex::cross(verts[i], verts[(i + 1) % n]));
        const double th = angle_between(a, b);
        for (int j = 0; j <= fan_samples; ++j) {
            const double t = static_cast<double>(j) / fan_samples;
            const Vec3 k = unit(a * std::sin((1 - t) * th) + b * std::sin(t * th));
            best = std::min(best, polygon_width(verts, k, 200));
        }
    }
    return best;
}

/// Distance from p to a sampled boundary, with p tested for containment by
/// the winding of the boundary around it in the tangent plane at p.
inline double point_to_sampled_body(const Vec3& p, const std::vector<Vec3>& boundary) {
    // containment: p is inside iff it lies left of every sampled chord
    bool inside = true;
    for (std::size_t i = 0; i < boundary.size() && inside; ++i) {
        const Vec3& a = boundary[i];
        const Vec3& b = boundary[(i + 1) % boundary.size()];
        if (sconvex::dot(sconvex::cross(a, b), p) < -1e-12) inside = false;
    }
    if (inside) return 0.0;
    double d = sconvex::pi;
    for (const Vec3& q : boundary) d = std::min(d, angle_between(p, q));
    return d;
}

/// Hausdorff distance between two bodies from dense boundary samples only.
inline double sampled_hausdorff(const sconvex::ConvexBody& a, const sconvex::ConvexBody& b, int per_segment) {
    const auto pa = boundary_samples(a, per_segment);
    const auto pb = boundary_samples(b, per_segment);
    double h = 0.0;
    for (const Vec3& p : pa) h = std::max(h, point_to_sampled_body(p, pb));
    for (const Vec3& p : pb) h = std::max(h, point_to_sampled_body(p, pa));
    return h;
}

/// Uniform point on S^2.
inline SpherePoint random_point(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    for (;;) {
        const Vec3 v{n(rng), n(rng), n(rng)};
        if (sconvex::norm(v) > 1e-3) return SpherePoint(v);
    }
}

/// Membership in a non-degenerate spherical triangle: x = alpha a + beta b
/// + gamma c with nonnegative coefficients. Each coefficient is rescaled to
/// the sine of the distance from x to the opposite side, so tol is a
/// distance.
inline bool in_triangle(const Vec3& x, const Vec3& a, const Vec3& b, const Vec3& c, double tol) {
    const double det = sconvex::dot(a, sconvex::cross(b, c));
    const double s = det > 0.0 ? 1.0 : -1.0;
    const Vec3 nbc = sconvex::cross(b, c);
    const Vec3 nca = sconvex::cross(c, a);
    const Vec3 nab = sconvex::cross(a, b);
    const double al = s * sconvex::dot(x, nbc) / sconvex::norm(nbc);
    const double be = s * sconvex::dot(x, nca) / sconvex::norm(nca);
    const double ga = s * sconvex::dot(x, nab) / sconvex::norm(nab);
    return al >= -tol && be >= -tol && ga >= -tol;
}

/// Approximation options carrying the nominal thickness.
inline sconvex::ApproxOptions hinted(double delta) {
    sconvex::ApproxOptions opt;
    opt.delta_hint = delta;
    return opt;
}

}  // namespace oracle
