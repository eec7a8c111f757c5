#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "sconvex/body.hpp"

namespace sconvex {

namespace detail {

inline double orient2d(const PlanePoint& o, const PlanePoint& a, const PlanePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Andrew's monotone chain; counterclockwise, collinear points dropped.
inline std::vector<std::size_t> planar_hull(std::span<const PlanePoint> pts) {
    std::vector<std::size_t> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return pts[a].x < pts[b].x || (pts[a].x == pts[b].x && pts[a].y < pts[b].y);
    });
    if (idx.size() < 3) return idx;

    const double scale = [&] {
        double m = 1.0;
        for (const auto& p : pts) m = std::max({m, std::abs(p.x), std::abs(p.y)});
        return m;
    }();
    const double eps = 1e-13 * scale * scale;

    std::vector<std::size_t> hull(2 * idx.size());
    std::size_t k = 0;
    for (std::size_t i : idx) {
        while (k >= 2 && orient2d(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= eps) --k;
        hull[k++] = i;
    }
    for (std::size_t j = idx.size() - 1, t = k + 1; j-- > 0;) {
        const std::size_t i = idx[j];
        while (k >= t && orient2d(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= eps) --k;
        hull[k++] = i;
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace detail

/// Vertices of conv(points), counterclockwise.
inline std::vector<SpherePoint> spherical_hull_vertices(std::span<const SpherePoint> points) {
    if (points.size() < 3) {
        throw Error(ErrorCode::DegenerateInput, "a hull needs at least three points");
    }
    Vec3 sum;
    for (const auto& p : points) sum += p.vec();
    if (norm(sum) <= degeneracy_tol) {
        throw Error(ErrorCode::NoCommonHemisphere, "points are balanced around the origin");
    }
    const SpherePoint center(sum);
    for (const auto& p : points) {
        if (dot(p, center) <= 1e-9) {
            throw Error(ErrorCode::NoCommonHemisphere, "points do not lie in a common open hemisphere");
        }
    }
    const Gnomonic proj(center);
    std::vector<PlanePoint> planar;
    planar.reserve(points.size());
    for (const auto& p : points) planar.push_back(proj.project(p));

    const auto hull = detail::planar_hull(planar);
    if (hull.size() < 3) {
        throw Error(ErrorCode::DegenerateInput, "points lie on one great circle");
    }
    std::vector<SpherePoint> out;
    out.reserve(hull.size());
    for (std::size_t i : hull) out.push_back(points[i]);
    return out;
}

/// Smallest convex set containing the points, as a geodesic polygon.
inline ConvexBody spherical_hull(std::span<const SpherePoint> points) {
    const auto verts = spherical_hull_vertices(points);
    std::vector<Segment> segs;
    segs.reserve(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        segs.push_back(Segment::geodesic(verts[i], verts[(i + 1) % verts.size()]));
    }
    return ConvexBody(std::move(segs));
}

/// Convex geodesic polygon through the given counterclockwise vertices.
inline ConvexBody polygon(std::span<const SpherePoint> vertices) {
    std::vector<Segment> segs;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        segs.push_back(Segment::geodesic(vertices[i], vertices[(i + 1) % vertices.size()]));
    }
    return ConvexBody(std::move(segs));
}

}  // namespace sconvex
