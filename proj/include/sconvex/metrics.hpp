#pragma once

// Distances between points and bodies, and the Hausdorff distance between
// two bodies.

#include <algorithm>
#include <cmath>
#include <vector>

#include "sconvex/width.hpp"

namespace sconvex {

/// Distance from p to the body (zero inside).
inline double point_to_body(const SpherePoint& p, const ConvexBody& body) {
    if (body.contains(p)) return 0.0;
    double d = pi;
    for (const Segment& s : body.segments()) d = std::min(d, s.distance_to(p));
    return d;
}

struct HausdorffResult {
    double value = 0.0;
    double directed_ab = 0.0;  // sup over a of the distance to b
    double directed_ba = 0.0;
    int resolution = 0;        // boundary samples per body
    SpherePoint witness;       // boundary point where the maximum is attained
};

namespace detail {

struct DirectedResult {
    double distance = 0.0;
    SpherePoint witness;
};

/// sup over the boundary of a of the distance to b. Both bodies are convex,
/// so the supremum over a is attained on its boundary.
inline DirectedResult directed_hausdorff(const ConvexBody& a, const ConvexBody& b, int samples) {
    const double per = a.perimeter();
    std::vector<double> ss;
    ss.reserve(static_cast<std::size_t>(samples) + a.size());
    for (int i = 0; i < samples; ++i) ss.push_back(per * i / samples);
    for (std::size_t i = 0; i < a.size(); ++i) ss.push_back(a.offset(i));
    std::sort(ss.begin(), ss.end());

    auto dist_at = [&](double s) {
        s -= std::floor(s / per) * per;
        return point_to_body(a.boundary_point(s / per), b);
    };
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < ss.size(); ++i) {
        const double d = dist_at(ss[i]);
        if (d > best) {
            best = d;
            arg = i;
        }
    }
    double best_s = ss[arg];
    if (best > 0.0) {
        const double lo = arg > 0 ? ss[arg - 1] : ss.back() - per;
        const double hi = arg + 1 < ss.size() ? ss[arg + 1] : ss.front() + per;
        auto [s, neg] = golden_min([&](double s) { return -dist_at(s); }, lo, hi, 1e-12);
        if (-neg > best) {
            best = -neg;
            best_s = s;
        }
    }
    best_s -= std::floor(best_s / per) * per;
    return {std::max(best, 0.0), a.boundary_point(best_s / per)};
}

}  // namespace detail

/// Hausdorff distance between two bodies, from dense boundary sampling with
/// local refinement around the worst sample.
inline HausdorffResult hausdorff(const ConvexBody& a, const ConvexBody& b, int samples = 2048) {
    const auto ab = detail::directed_hausdorff(a, b, samples);
    const auto ba = detail::directed_hausdorff(b, a, samples);
    const bool first = ab.distance >= ba.distance;
    return {std::max(ab.distance, ba.distance), ab.distance, ba.distance, samples,
            first ? ab.witness : ba.witness};
}

}  // namespace sconvex
