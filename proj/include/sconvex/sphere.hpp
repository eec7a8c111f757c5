#pragma once

// Closed-form primitives on the unit sphere S^2. Points are unit vectors in
// E^3, great circles are represented by their poles, all angles in radians.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "sconvex/error.hpp"

namespace sconvex {

inline constexpr double pi = std::numbers::pi;
inline constexpr double half_pi = std::numbers::pi / 2.0;

/// Cross products shorter than this are treated as parallel vectors.
inline constexpr double degeneracy_tol = 1e-12;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    constexpr Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// Point of S^2. The constructor renormalizes, so the unit-norm invariant
/// holds up to one rounding.
class SpherePoint {
public:
    SpherePoint() : v_{0.0, 0.0, 1.0} {}
    explicit SpherePoint(const Vec3& v) {
        const double n = norm(v);
        if (!(n > 0.0) || !std::isfinite(n)) {
            throw Error(ErrorCode::DegeneratePair, "cannot normalize a zero or non-finite vector");
        }
        v_ = v / n;
    }
    SpherePoint(double x, double y, double z) : SpherePoint(Vec3{x, y, z}) {}

    /// Keeps v bit-for-bit when it is already unit up to rounding, so stored
    /// coordinates survive a save/load cycle unchanged.
    static SpherePoint from_unit(const Vec3& v) {
        const double n = norm(v);
        if (std::abs(n - 1.0) > 1e-14) return SpherePoint(v);
        SpherePoint p;
        p.v_ = v;
        return p;
    }

    const Vec3& vec() const noexcept { return v_; }
    double x() const noexcept { return v_.x; }
    double y() const noexcept { return v_.y; }
    double z() const noexcept { return v_.z; }

    SpherePoint antipode() const { return SpherePoint(-v_); }

    bool operator==(const SpherePoint&) const = default;

private:
    Vec3 v_;
};

inline double dot(const SpherePoint& a, const SpherePoint& b) { return dot(a.vec(), b.vec()); }
inline Vec3 cross(const SpherePoint& a, const SpherePoint& b) { return cross(a.vec(), b.vec()); }

/// Great circle given by its pole; the closed hemisphere it bounds is
/// {x : x . pole >= 0}.
struct GreatCirclePole {
    SpherePoint pole;

    bool contains(const SpherePoint& p, double tol = 0.0) const { return dot(p, pole) >= -tol; }
};

/// Geodesic distance |ab| in [0, pi].
inline double dist(const SpherePoint& a, const SpherePoint& b) {
    // atan2 keeps full precision for nearly equal and nearly antipodal points
    return std::atan2(norm(cross(a, b)), std::clamp(dot(a, b), -1.0, 1.0));
}

inline bool is_degenerate_pair(const SpherePoint& a, const SpherePoint& b) {
    return norm(cross(a, b)) <= degeneracy_tol;
}

/// Pole of the great circle through a and b. Walking a -> b along the shorter
/// arc keeps the pole on the left.
inline GreatCirclePole great_circle_pole(const SpherePoint& a, const SpherePoint& b) {
    // a x (b - a) keeps full relative precision when a and b are close
    const Vec3 c = cross(a.vec(), b.vec() - a.vec());
    if (norm(c) <= degeneracy_tol) {
        throw Error(ErrorCode::DegeneratePair, "points are equal or antipodal");
    }
    return {SpherePoint(c)};
}

/// Slerp along the shorter arc from a (t = 0) to b (t = 1).
inline SpherePoint arc_point(const SpherePoint& a, const SpherePoint& b, double t) {
    const double theta = dist(a, b);
    if (theta <= degeneracy_tol) {
        return a;
    }
    if (pi - theta <= degeneracy_tol) {
        throw Error(ErrorCode::DegeneratePair, "antipodal arc endpoints");
    }
    if (t == 0.0) return a;
    if (t == 1.0) return b;
    const double s = std::sin(theta);
    const double wa = std::sin((1.0 - t) * theta) / s;
    const double wb = std::sin(t * theta) / s;
    return SpherePoint(a.vec() * wa + b.vec() * wb);
}

/// Unit tangent at v pointing along the great circle toward p.
inline Vec3 tangent_toward(const SpherePoint& v, const SpherePoint& p) {
    const Vec3 t = p.vec() - v.vec() * dot(p, v);
    const double n = norm(t);
    if (n <= degeneracy_tol) {
        throw Error(ErrorCode::DegeneratePair, "tangent undefined for equal or antipodal points");
    }
    return t / n;
}

/// Rotation of p about the unit axis by angle (right-handed, Rodrigues).
inline SpherePoint rotate_about(const SpherePoint& p, const SpherePoint& axis, double angle) {
    const Vec3& k = axis.vec();
    const Vec3& v = p.vec();
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return SpherePoint(v * c + cross(k, v) * s + k * (dot(k, v) * (1.0 - c)));
}

/// Orthonormal tangent frame (e1, e2) at n with e1 x e2 = n.
struct TangentFrame {
    Vec3 e1;
    Vec3 e2;
    Vec3 n;
};

inline TangentFrame tangent_frame(const SpherePoint& center) {
    const Vec3& n = center.vec();
    const Vec3 helper = std::abs(n.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    Vec3 e1 = helper - n * dot(helper, n);
    e1 = e1 / norm(e1);
    return {e1, cross(n, e1), n};
}

/// Intersection points of circle(c1, r1) and circle(c2, r2). Two points are
/// ordered so that the first lies on the positive side of the pole c1 x c2.
inline std::vector<SpherePoint> circle_circle_intersection(const SpherePoint& c1, double r1,
                                                          const SpherePoint& c2, double r2) {
    const Vec3 axis = cross(c1.vec(), c2.vec() - c1.vec());
    const double s = norm(axis);
    if (s <= degeneracy_tol) {
        if (dot(c1, c2) > 0.0 && std::abs(r1 - r2) <= degeneracy_tol) {
            throw Error(ErrorCode::CoincidentCircles, "identical circles");
        }
        throw Error(ErrorCode::NoIntersection, "concentric or antipodal centers");
    }
    const double cos_theta = dot(c1, c2);
    const double sin2 = s * s;
    const double cr1 = std::cos(r1);
    const double cr2 = std::cos(r2);
    double alpha = (cr1 - cr2 * cos_theta) / sin2;
    double beta = (cr2 - cr1 * cos_theta) / sin2;
    if (r1 == r2) {
        // stable for nearby centers
        alpha = beta = cr1 / (1.0 + cos_theta);
    }
    const Vec3 base = c1.vec() * alpha + c2.vec() * beta;
    double gamma2 = 1.0 - dot(base, base);
    if (gamma2 < -1e-12) {
        throw Error(ErrorCode::NoIntersection, "circles are disjoint");
    }
    const Vec3 n = axis / s;
    if (gamma2 <= 0.0) {
        return {SpherePoint(base)};
    }
    const double gamma = std::sqrt(gamma2);
    return {SpherePoint(base + n * gamma), SpherePoint(base - n * gamma)};
}

/// pi/2 - dist(p, pole): positive inside the hemisphere, zero on its boundary.
inline double signed_height(const SpherePoint& p, const GreatCirclePole& k) {
    return std::atan2(dot(p, k.pole), norm(cross(p, k.pole)));
}

/// Distance from p to the geodesic arc ab. Coincident endpoints are treated
/// as a single point.
inline double dist_point_to_geodesic_arc(const SpherePoint& p, const SpherePoint& a,
                                         const SpherePoint& b) {
    if (dist(a, b) <= degeneracy_tol) {
        return dist(p, a);
    }
    const GreatCirclePole n = great_circle_pole(a, b);
    const Vec3 off = p.vec() - n.pole.vec() * dot(p, n.pole);
    if (norm(off) > degeneracy_tol) {
        const SpherePoint foot(off);
        const bool after_a = dot(cross(a, foot), n.pole.vec()) >= 0.0;
        const bool before_b = dot(cross(foot, b), n.pole.vec()) >= 0.0;
        if (after_a && before_b) {
            return std::abs(signed_height(p, n));
        }
    }
    return std::min(dist(p, a), dist(p, b));
}

/// Angle at v between the geodesics toward p and toward q, in [0, pi].
inline double angle_at(const SpherePoint& v, const SpherePoint& p, const SpherePoint& q) {
    const Vec3 tp = tangent_toward(v, p);
    const Vec3 tq = tangent_toward(v, q);
    return std::atan2(norm(cross(tp, tq)), dot(tp, tq));
}

/// Counterclockwise (seen from outside the sphere) angle at v from the
/// direction of p to the direction of q, in (-pi, pi].
inline double signed_angle_at(const SpherePoint& v, const SpherePoint& p, const SpherePoint& q) {
    const Vec3 tp = tangent_toward(v, p);
    const Vec3 tq = tangent_toward(v, q);
    return std::atan2(dot(cross(tp, tq), v.vec()), dot(tp, tq));
}

/// Upper bound on the distance from the apex d of a triangle abd to the side
/// ab, given |ab| = chord and the apex angle adb = apex.
inline double lemma2_bound(double chord, double apex) {
    if (!(chord > 0.0 && chord < pi) || !(apex > 0.0 && apex < pi)) {
        throw Error(ErrorCode::OutOfDomain, "chord and apex angle must lie in (0, pi)");
    }
    const double ratio = std::tan(chord / 2.0) / std::tan(apex / 2.0);
    if (ratio > 1.0) {
        throw Error(ErrorCode::OutOfDomain, "no triangle with this chord and apex angle");
    }
    return std::asin(ratio);
}

struct PlanePoint {
    double x = 0.0;
    double y = 0.0;
};

/// Central projection onto the tangent plane at center. Great circles map to
/// straight lines.
class Gnomonic {
public:
    explicit Gnomonic(const SpherePoint& center) : frame_(tangent_frame(center)) {}

    PlanePoint project(const SpherePoint& p) const {
        const double h = dot(p.vec(), frame_.n);
        if (h <= 1e-9) {
            throw Error(ErrorCode::OutsideHemisphere, "point not in the open hemisphere of the projection center");
        }
        return {dot(p.vec(), frame_.e1) / h, dot(p.vec(), frame_.e2) / h};
    }

    SpherePoint unproject(const PlanePoint& q) const {
        return SpherePoint(frame_.n + frame_.e1 * q.x + frame_.e2 * q.y);
    }

private:
    TangentFrame frame_;
};

inline PlanePoint gnomonic_project(const SpherePoint& p, const SpherePoint& center) {
    return Gnomonic(center).project(p);
}

inline SpherePoint gnomonic_unproject(const PlanePoint& q, const SpherePoint& center) {
    return Gnomonic(center).unproject(q);
}

}  // namespace sconvex
