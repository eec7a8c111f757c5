#pragma once

#include <cmath>
#include <optional>

#include "sconvex/sphere.hpp"

namespace sconvex {

enum class SegmentKind { Geodesic, CircleArc };

/// Tolerance for endpoints lying on their circle and for chain junctions.
inline constexpr double junction_tol = 1e-10;

/// Result of maximizing or minimizing x . k over a segment.
struct SegmentExtremum {
    double value = 0.0;  // the extreme inner product
    double t = 0.0;      // segment parameter of the extremum
    SpherePoint point;
};

/// One boundary piece: a geodesic arc or an arc of a small circle. The
/// supporting pole at a point is always point x direction-of-travel, so a
/// counterclockwise boundary has its interior on the pole side.
class Segment {
public:
    static Segment geodesic(const SpherePoint& a, const SpherePoint& b) {
        if (pi - dist(a, b) <= degeneracy_tol) {
            throw Error(ErrorCode::DegeneratePair, "geodesic segment endpoints are antipodal");
        }
        Segment s;
        s.kind_ = SegmentKind::Geodesic;
        s.from_ = a;
        s.to_ = b;
        s.length_ = dist(a, b);
        if (s.length_ > degeneracy_tol) {
            s.pole_ = great_circle_pole(a, b).pole;
        }
        return s;
    }

    /// Arc of circle(center, radius) from `from` to `to`, traversed
    /// counterclockwise about the center when ccw is set.
    static Segment circle_arc(const SpherePoint& center, double radius, const SpherePoint& from,
                              const SpherePoint& to, bool ccw = true) {
        if (!(radius > 0.0 && radius < pi)) {
            throw Error(ErrorCode::RadiusOutOfRange, "circle arc radius must lie in (0, pi)");
        }
        if (std::abs(dist(center, from) - radius) > junction_tol ||
            std::abs(dist(center, to) - radius) > junction_tol) {
            throw Error(ErrorCode::InvalidBody, "circle arc endpoints are not on the circle");
        }
        Segment s;
        s.kind_ = SegmentKind::CircleArc;
        s.center_ = center;
        s.radius_ = radius;
        s.from_ = from;
        s.to_ = to;
        s.ccw_ = ccw;
        const Vec3 u = radial(center, from);
        const Vec3 w = radial(center, to);
        double ang = std::atan2(dot(cross(u, w), center.vec()), dot(u, w));
        if (ang < 0.0) ang += 2.0 * pi;
        // endpoints closer than roundoff: zero-length, never a full turn
        if (ang > 2.0 * pi - 1e-12 || dist(from, to) <= degeneracy_tol) ang = 0.0;
        if (!ccw && ang > 0.0) ang -= 2.0 * pi;
        s.sweep_ = ang;
        s.length_ = std::sin(radius) * std::abs(ang);
        return s;
    }

    SegmentKind kind() const noexcept { return kind_; }
    bool is_geodesic() const noexcept { return kind_ == SegmentKind::Geodesic; }
    bool is_arc() const noexcept { return kind_ == SegmentKind::CircleArc; }
    const SpherePoint& start() const noexcept { return from_; }
    const SpherePoint& end() const noexcept { return to_; }
    const SpherePoint& center() const noexcept { return center_; }
    double radius() const noexcept { return radius_; }
    bool ccw() const noexcept { return ccw_; }
    /// Signed rotation about the center from start to end (arcs only).
    double sweep() const noexcept { return sweep_; }
    double length() const noexcept { return length_; }

    SpherePoint point_at(double t) const {
        if (t <= 0.0) return from_;
        if (t >= 1.0) return to_;
        if (is_geodesic()) return arc_point(from_, to_, t);
        return rotate_about(from_, center_, t * sweep_);
    }

    /// Supporting pole (left normal) at parameter t.
    GreatCirclePole pole_at(double t) const {
        if (is_geodesic()) return {pole_};
        const SpherePoint p = point_at(t);
        Vec3 n = (center_.vec() - p.vec() * std::cos(radius_)) / std::sin(radius_);
        if (!ccw_) n = -n;
        return {SpherePoint(n)};
    }

    GreatCirclePole start_pole() const { return pole_at(0.0); }
    GreatCirclePole end_pole() const { return pole_at(1.0); }

    /// Maximum of x . k over the segment.
    SegmentExtremum max_dot(const Vec3& k) const { return extremum(k, true); }
    /// Minimum of x . k over the segment.
    SegmentExtremum min_dot(const Vec3& k) const { return extremum(k, false); }

    /// Distance from p to the segment.
    double distance_to(const SpherePoint& p) const {
        if (is_geodesic()) return dist_point_to_geodesic_arc(p, from_, to_);
        const auto phi = angle_of(p);
        if (phi && within_sweep(*phi)) return std::abs(dist(p, center_) - radius_);
        return std::min(dist(p, from_), dist(p, to_));
    }

    /// Parameter of p if p lies on the segment within tol.
    std::optional<double> locate(const SpherePoint& p, double tol) const {
        if (distance_to(p) > tol) return std::nullopt;
        if (length_ <= degeneracy_tol) return 0.0;
        if (dist(p, from_) <= tol) return 0.0;
        if (dist(p, to_) <= tol) return 1.0;
        if (is_geodesic()) {
            return std::clamp(dist(from_, p) / length_, 0.0, 1.0);
        }
        const auto phi = angle_of(p);
        if (!phi) return std::nullopt;
        return std::clamp(*phi / sweep_, 0.0, 1.0);
    }

    /// The same carrier traversed from `a` to `b` (both on the segment).
    Segment sub(const SpherePoint& a, const SpherePoint& b) const {
        if (is_geodesic()) return geodesic(a, b);
        return circle_arc(center_, radius_, a, b, ccw_);
    }

private:
    Segment() = default;

    static Vec3 radial(const SpherePoint& c, const SpherePoint& p) {
        const Vec3 r = p.vec() - c.vec() * dot(p, c);
        const double n = norm(r);
        return n > 0.0 ? r / n : r;
    }

    /// Signed angle of p about the center, measured from start in the
    /// traversal direction's sign convention (in [0, 2pi) for ccw arcs, in
    /// (-2pi, 0] for cw arcs).
    std::optional<double> angle_of(const SpherePoint& p) const {
        const Vec3 u = radial(center_, from_);
        const Vec3 w = p.vec() - center_.vec() * dot(p, center_);
        if (norm(w) <= degeneracy_tol) return std::nullopt;
        double ang = std::atan2(dot(cross(u, w), center_.vec()), dot(u, w));
        if (ccw_) {
            if (ang < 0.0) ang += 2.0 * pi;
        } else if (ang > 0.0) {
            ang -= 2.0 * pi;
        }
        return ang;
    }

    bool within_sweep(double phi) const {
        return sweep_ >= 0.0 ? (phi >= 0.0 && phi <= sweep_) : (phi <= 0.0 && phi >= sweep_);
    }

    SegmentExtremum extremum(const Vec3& k, bool want_max) const {
        const double sign = want_max ? 1.0 : -1.0;
        SegmentExtremum best{dot(from_.vec(), k), 0.0, from_};
        const double ve = dot(to_.vec(), k);
        if (sign * ve > sign * best.value) best = {ve, 1.0, to_};
        if (length_ <= degeneracy_tol) return best;

        if (is_geodesic()) {
            Vec3 m = k - pole_.vec() * dot(k, pole_.vec());
            if (norm(m) <= degeneracy_tol) return best;
            if (!want_max) m = -m;
            const SpherePoint foot(m);
            const bool after_a = dot(cross(from_, foot), pole_.vec()) >= 0.0;
            const bool before_b = dot(cross(foot, to_), pole_.vec()) >= 0.0;
            if (after_a && before_b) {
                const double v = dot(foot.vec(), k);
                if (sign * v > sign * best.value) {
                    best = {v, std::clamp(dist(from_, foot) / length_, 0.0, 1.0), foot};
                }
            }
            return best;
        }

        const Vec3 u = radial(center_, from_);
        const Vec3 w = cross(center_.vec(), u);
        const double b = dot(u, k);
        const double c = dot(w, k);
        if (std::hypot(b, c) <= degeneracy_tol) return best;
        double phi = std::atan2(c, b);
        if (!want_max) phi += pi;
        if (sweep_ >= 0.0) {
            phi = std::fmod(phi + 4.0 * pi, 2.0 * pi);
        } else {
            phi = std::fmod(phi - 4.0 * pi, 2.0 * pi);
        }
        if (within_sweep(phi)) {
            const SpherePoint x = rotate_about(from_, center_, phi);
            const double v = dot(x.vec(), k);
            if (sign * v > sign * best.value) best = {v, phi / sweep_, x};
        }
        return best;
    }

    SegmentKind kind_ = SegmentKind::Geodesic;
    SpherePoint from_;
    SpherePoint to_;
    SpherePoint center_;
    SpherePoint pole_;
    double radius_ = 0.0;
    double sweep_ = 0.0;
    double length_ = 0.0;
    bool ccw_ = true;
};

}  // namespace sconvex
