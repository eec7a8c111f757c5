#pragma once

// Lunes, the width of a body determined by a supporting hemisphere, the
// thickness (minimal width) and the thickness chords realizing it.
//
// For widths below pi/2 the thinnest lune K n K* containing C is found by
// taking the point of C farthest from bd(K): width_K(C) equals its height
// above bd(K), and bd(K*) passes through it orthogonally to the chord. The
// test suite cross-checks this against direct lune minimization.

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "sconvex/body.hpp"

namespace sconvex {

/// Intersection of the hemispheres with poles g and h.
struct Lune {
    GreatCirclePole g;
    GreatCirclePole h;
};

inline void check_lune(const Lune& l) {
    const double a = dist(l.g.pole, l.h.pole);
    if (!(a > degeneracy_tol && a < pi - degeneracy_tol)) {
        throw Error(ErrorCode::InvalidLune, "lune poles must be distinct and not antipodal");
    }
}

inline double lune_thickness(const Lune& l) {
    check_lune(l);
    return pi - dist(l.g.pole, l.h.pole);
}

/// Centers of the two semicircles bounding the lune: the first lies on
/// bd(G), the second on bd(H).
inline std::pair<SpherePoint, SpherePoint> semicircle_midpoints(const Lune& l) {
    check_lune(l);
    const Vec3& g = l.g.pole.vec();
    const Vec3& h = l.h.pole.vec();
    return {SpherePoint(h - g * dot(h, g)), SpherePoint(g - h * dot(g, h))};
}

/// Arc joining the semicircle centers of a minimal lune.
struct ThicknessChord {
    SpherePoint f;  // on bd(K)
    SpherePoint g;  // on bd(K*)
    Lune lune;
};

struct WidthResult {
    double width = 0.0;
    SpherePoint far_point;
};

/// The far hemisphere K* of the minimal lune, given K and the far point.
inline GreatCirclePole opposite_pole(const GreatCirclePole& k, const SpherePoint& far) {
    return {SpherePoint(far.vec() * dot(far, k.pole) - k.pole.vec())};
}

namespace detail {

inline WidthResult width_unchecked(const ConvexBody& body, const GreatCirclePole& k) {
    // heights beyond pi/2 alias under asin; the pole itself then lies inside
    if (body.contains(k.pole)) return {half_pi, k.pole};
    const Vec3& kv = k.pole.vec();
    SegmentExtremum best = body.segment(0).max_dot(kv);
    for (std::size_t i = 1; i < body.size(); ++i) {
        const SegmentExtremum e = body.segment(i).max_dot(kv);
        if (e.value > best.value) best = e;
    }
    return {std::asin(std::clamp(best.value, -1.0, 1.0)), best.point};
}

}  // namespace detail

/// width_K(C) for a hemisphere K supporting C, with the point where bd(K*)
/// touches C.
inline WidthResult width_at(const ConvexBody& body, const GreatCirclePole& k) {
    const double low = std::asin(std::clamp(body.min_dot(k.pole.vec()).value, -1.0, 1.0));
    if (low < -support_tol || low > support_tol) {
        throw Error(ErrorCode::NotSupporting, "hemisphere does not support the body");
    }
    WidthResult r = detail::width_unchecked(body, k);
    if (r.width >= half_pi - support_tol) {
        throw Error(ErrorCode::WidthOutOfRegime, "width is not below pi/2");
    }
    return r;
}

struct ThicknessResult {
    double delta = 0.0;
    ThicknessChord chord;
    double u = 0.0;  // support parameter of the realizing hemisphere
};

struct ThicknessOptions {
    int coarse_samples = 720;
    int fan_samples = 8;
    int refine_candidates = 4;
};

namespace detail {

/// Sample parameters: a uniform grid over the support curve plus a small fan
/// at every vertex and the midpoint of every segment.
inline std::vector<double> support_grid(const SupportCurve& sc, int uniform, int fan) {
    std::vector<double> us;
    for (int i = 0; i < uniform; ++i) us.push_back(sc.total() * i / uniform);
    for (const SupportPiece& p : sc.pieces()) {
        if (p.length <= degeneracy_tol) continue;
        if (p.kind == SupportPiece::Kind::Fan) {
            for (int j = 0; j <= fan; ++j) us.push_back(p.u0 + p.length * j / fan);
        } else {
            us.push_back(p.u0 + 0.5 * p.length);
        }
    }
    std::sort(us.begin(), us.end());
    us.erase(std::unique(us.begin(), us.end()), us.end());
    return us;
}

template <class F>
std::pair<double, double> golden_min(F&& f, double a, double b, double tol = 1e-11) {
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - r * (b - a);
    double d = a + r * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    return fc <= fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace detail

/// Delta(C): the minimum of width_K(C) over all supporting hemispheres K,
/// with a chord realizing it. Coarse scan over the support curve, then
/// golden-section refinement around the best candidates.
inline ThicknessResult thickness(const ConvexBody& body, const ThicknessOptions& opt = {}) {
    const SupportCurve sc(body);
    auto width_of = [&](double u) { return detail::width_unchecked(body, sc.at(u).pole).width; };

    const auto us = detail::support_grid(sc, opt.coarse_samples, opt.fan_samples);
    std::vector<std::pair<double, std::size_t>> scored;
    scored.reserve(us.size());
    for (std::size_t i = 0; i < us.size(); ++i) scored.emplace_back(width_of(us[i]), i);
    std::sort(scored.begin(), scored.end());

    std::vector<std::pair<double, double>> found;  // (width, u)
    for (const auto& [w, i] : scored) found.emplace_back(w, us[i]);
    const int n_refine = std::min<int>(opt.refine_candidates, static_cast<int>(scored.size()));
    for (int c = 0; c < n_refine; ++c) {
        const std::size_t i = scored[c].second;
        const double lo = i > 0 ? us[i - 1] : us.back() - sc.total();
        const double hi = i + 1 < us.size() ? us[i + 1] : us.front() + sc.total();
        auto [u, w] = detail::golden_min(width_of, lo, hi);
        found.emplace_back(w, u - std::floor(u / sc.total()) * sc.total());
    }
    double best_w = found.front().first;
    for (const auto& f : found) best_w = std::min(best_w, f.first);
    // smallest parameter among ties keeps chords reproducible
    double best_u = sc.total();
    for (const auto& [w, u] : found) {
        if (w <= best_w + 1e-12) best_u = std::min(best_u, u);
    }

    const SupportSample s = sc.at(best_u);
    const WidthResult wr = detail::width_unchecked(body, s.pole);
    if (wr.width >= half_pi - support_tol) {
        throw Error(ErrorCode::ThicknessOutOfRegime, "thickness is not below pi/2");
    }
    const Lune lune{s.pole, opposite_pole(s.pole, wr.far_point)};
    // on a geodesic side the touch point is the foot of the chord, not s.point
    return {wr.width, ThicknessChord{semicircle_midpoints(lune).first, wr.far_point, lune}, best_u};
}

enum class Side { Right, Left };

/// Far end of the thickness chord starting at boundary point f, using the
/// right or left supporting hemisphere at f.
inline SpherePoint opposite_point(const ConvexBody& body, const SpherePoint& f, Side side, double delta) {
    const SupportPair poles = body.supporting_poles_at(f);
    const GreatCirclePole& k = side == Side::Right ? poles.right : poles.left;
    const WidthResult w = width_at(body, k);
    if (w.width - delta > 1e-8) {
        throw Error(ErrorCode::NotConstantWidthPoint, "width at this point exceeds the thickness");
    }
    return w.far_point;
}

inline SpherePoint opposite_point(const ConvexBody& body, const SpherePoint& f, Side side) {
    return opposite_point(body, f, side, thickness(body).delta);
}

struct ConstantWidthReport {
    bool constant = false;
    double max_deviation = 0.0;
    double delta = 0.0;
    std::size_t samples = 0;
};

inline ConstantWidthReport is_constant_width(const ConvexBody& body, double tol, int samples = 1024) {
    const double delta = thickness(body).delta;
    const SupportCurve sc(body);
    const auto us = detail::support_grid(sc, samples, 8);
    double dev = 0.0;
    for (double u : us) {
        const double w = detail::width_unchecked(body, sc.at(u).pole).width;
        dev = std::max(dev, std::abs(w - delta));
    }
    return {dev <= tol, dev, delta, us.size()};
}

}  // namespace sconvex
