#pragma once

// Canonical input bodies: caps, spherical Reuleaux odd-gons and the quarter
// disk, each returned with its boundary decomposition.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "sconvex/decomposition.hpp"

namespace sconvex {

struct GeneratedBody {
    ConvexBody body;
    std::optional<Decomposition> decomposition;
    double delta = 0.0;
};

inline const SpherePoint& north_pole() {
    static const SpherePoint p(0.0, 0.0, 1.0);
    return p;
}

/// Point at distance `polar` from `center` in tangent direction `azimuth`.
inline SpherePoint polar_point(const SpherePoint& center, double polar, double azimuth) {
    const TangentFrame fr = tangent_frame(center);
    const Vec3 dir = fr.e1 * std::cos(azimuth) + fr.e2 * std::sin(azimuth);
    return SpherePoint(fr.n * std::cos(polar) + dir * std::sin(polar));
}

/// Disk of radius r; constant width 2r.
inline GeneratedBody cap(const SpherePoint& center, double r) {
    if (!(r > 0.0 && r < pi / 4.0)) {
        throw Error(ErrorCode::RadiusOutOfRange, "cap radius must lie in (0, pi/4)");
    }
    const SpherePoint p0 = polar_point(center, r, 0.0);
    const SpherePoint p1 = polar_point(center, r, pi);
    ConvexBody body({Segment::circle_arc(center, r, p0, p1), Segment::circle_arc(center, r, p1, p0)});
    Decomposed d = decompose(body);
    // the nominal width is exact; the measured one carries rounding
    return {std::move(d.body), std::move(d.decomposition), 2.0 * r};
}

inline GeneratedBody cap(double r) { return cap(north_pole(), r); }

/// Circumradius of the regular spherical n-gon whose vertices at index
/// offset (n-1)/2 are w apart.
inline double reuleaux_circumradius(int n, double w) {
    const int m = (n - 1) / 2;
    const double dphi = 2.0 * pi * m / n;
    auto chord = [&](double rho) {
        const double s = std::sin(rho);
        const double c = std::cos(rho);
        return std::acos(std::clamp(c * c + s * s * std::cos(dphi), -1.0, 1.0));
    };
    double lo = 0.0;
    double hi = half_pi;
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        (chord(mid) < w ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

inline std::vector<SpherePoint> reuleaux_vertices(int n, double w, const SpherePoint& center) {
    const double rho = reuleaux_circumradius(n, w);
    std::vector<SpherePoint> v;
    for (int i = 0; i < n; ++i) v.push_back(polar_point(center, rho, 2.0 * pi * i / n));
    return v;
}

/// Spherical Reuleaux n-gon of width w: arc i runs from vertex i to i+1 and
/// is centered at the opposite vertex.
inline GeneratedBody reuleaux(int n, double w, const SpherePoint& center = north_pole()) {
    if (n < 3 || n % 2 == 0) {
        throw Error(ErrorCode::EvenN, "sides must be odd and at least 3");
    }
    if (!(w > 0.0 && w < half_pi)) {
        throw Error(ErrorCode::WidthOutOfRange, "width must lie in (0, pi/2)");
    }
    const auto v = reuleaux_vertices(n, w, center);
    const int m = (n - 1) / 2;
    std::vector<Segment> segs;
    for (int i = 0; i < n; ++i) {
        segs.push_back(Segment::circle_arc(v[(i + m + 1) % n], w, v[i], v[(i + 1) % n]));
    }
    Decomposed d = decompose(make_validated(std::move(segs)));
    return {std::move(d.body), std::move(d.decomposition), w};
}

/// Two radii of length r at a right angle closed by the quarter circle.
/// The decomposition is computed numerically and may be absent.
inline GeneratedBody quarter_disk(double r, const SpherePoint& center = north_pole()) {
    if (!(r > 0.0 && r < half_pi)) {
        throw Error(ErrorCode::RadiusOutOfRange, "quarter disk radius must lie in (0, pi/2)");
    }
    const SpherePoint a = polar_point(center, r, 0.0);
    const SpherePoint b = polar_point(center, r, half_pi);
    ConvexBody body = make_validated({Segment::geodesic(center, a), Segment::circle_arc(center, r, a, b),
                                      Segment::geodesic(b, center)});
    try {
        Decomposed d = decompose(body);
        return {std::move(d.body), std::move(d.decomposition), d.delta};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::DecompositionFailed) throw;
        const double delta = thickness(body).delta;
        return {std::move(body), std::nullopt, delta};
    }
}

}  // namespace sconvex
