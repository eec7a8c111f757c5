#pragma once

// Boundary representation of spherical convex bodies: a closed,
// counterclockwise chain of segments, plus membership, support and
// convexity queries.

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sconvex/segment.hpp"

namespace sconvex {

/// Tolerance for supporting-hemisphere and convexity checks.
inline constexpr double support_tol = 1e-9;
/// Tolerance for point membership; ties on the boundary count as inside.
inline constexpr double contains_tol = 1e-10;

struct SupportPair {
    GreatCirclePole right;
    GreatCirclePole left;
};

/// Where a point sits on the boundary.
struct BoundaryLocation {
    std::size_t segment = 0;
    double t = 0.0;
    bool at_vertex = false;  // t == 0 of `segment`
};

class ConvexBody {
public:
    /// Takes a closed chain. Chain closure and segment sanity are checked
    /// here; convexity is checked separately by is_convex().
    explicit ConvexBody(std::vector<Segment> segments) : segments_(std::move(segments)) {
        if (segments_.size() < 2) {
            throw Error(ErrorCode::InvalidBody, "a body needs at least two boundary segments");
        }
        double total = 0.0;
        for (std::size_t i = 0; i < segments_.size(); ++i) {
            const Segment& s = segments_[i];
            const Segment& next = segments_[(i + 1) % segments_.size()];
            if (s.length() <= degeneracy_tol) {
                throw Error(ErrorCode::InvalidBody, "zero-length segment " + std::to_string(i));
            }
            if (dist(s.end(), next.start()) > junction_tol) {
                throw Error(ErrorCode::InvalidBody, "chain is open after segment " + std::to_string(i));
            }
            offsets_.push_back(total);
            total += s.length();
        }
        perimeter_ = total;

        Vec3 sum;
        for (const Segment& s : segments_) {
            for (int j = 0; j < 8; ++j) sum += s.point_at(j / 8.0).vec() * s.length();
        }
        if (norm(sum) <= degeneracy_tol) {
            throw Error(ErrorCode::InvalidBody, "boundary has no interior reference point");
        }
        interior_ = SpherePoint(sum);
        frame_ = tangent_frame(interior_);
        for (const Segment& s : segments_) azimuths_.push_back(azimuth(s.start()));
    }

    std::span<const Segment> segments() const noexcept { return segments_; }
    const Segment& segment(std::size_t i) const { return segments_.at(i); }
    std::size_t size() const noexcept { return segments_.size(); }
    double perimeter() const noexcept { return perimeter_; }
    /// Arc length from the start of segment 0 to the start of segment i.
    double offset(std::size_t i) const { return offsets_.at(i); }
    /// A fixed interior point (normalized boundary centroid).
    const SpherePoint& interior_point() const noexcept { return interior_; }

    std::size_t next(std::size_t i) const noexcept { return (i + 1) % segments_.size(); }
    std::size_t prev(std::size_t i) const noexcept { return (i + segments_.size() - 1) % segments_.size(); }

    /// Point at fraction s of the perimeter, counterclockwise from the start
    /// of segment 0.
    SpherePoint boundary_point(double s) const {
        s -= std::floor(s);
        const double target = s * perimeter_;
        std::size_t i = segments_.size() - 1;
        for (std::size_t j = 1; j < segments_.size(); ++j) {
            if (offsets_[j] > target) {
                i = j - 1;
                break;
            }
        }
        const Segment& seg = segments_[i];
        return seg.point_at((target - offsets_[i]) / seg.length());
    }

    bool contains(const SpherePoint& p) const {
        if (dist(p, interior_) <= degeneracy_tol) return true;
        if (norm(cross(p, interior_)) <= degeneracy_tol) return false;  // antipode of interior point
        const Segment& seg = segments_[sector_of(p)];
        if (seg.is_geodesic()) {
            return signed_height(p, seg.pole_at(0.0)) >= -contains_tol;
        }
        const double d = dist(p, seg.center());
        if (!seg.ccw()) return d >= seg.radius() - contains_tol;
        if (d <= seg.radius() + contains_tol) return true;
        // outside the disk: inside the body only while still approaching the
        // center along the ray from the interior point
        const Vec3 away = -tangent_toward(p, interior_);
        return dot(away, seg.center().vec()) > 0.0;
    }

    std::optional<BoundaryLocation> locate(const SpherePoint& p, double tol = support_tol) const {
        for (std::size_t i = 0; i < segments_.size(); ++i) {
            if (dist(p, segments_[i].start()) <= tol) return BoundaryLocation{i, 0.0, true};
        }
        std::optional<BoundaryLocation> best;
        double best_d = tol;
        for (std::size_t i = 0; i < segments_.size(); ++i) {
            const double d = segments_[i].distance_to(p);
            if (d <= best_d) {
                if (auto t = segments_[i].locate(p, tol)) {
                    best_d = d;
                    best = BoundaryLocation{i, *t, false};
                }
            }
        }
        if (best && best->t >= 1.0) return BoundaryLocation{next(best->segment), 0.0, true};
        return best;
    }

    SupportPair supporting_poles_at(const SpherePoint& p) const {
        const auto loc = locate(p);
        if (!loc) throw Error(ErrorCode::NotOnBoundary, "point is not on the boundary");
        const Segment& seg = segments_[loc->segment];
        if (loc->at_vertex) {
            return {segments_[prev(loc->segment)].end_pole(), seg.start_pole()};
        }
        const GreatCirclePole k = seg.pole_at(loc->t);
        return {k, k};
    }

    /// Smallest inner product of a boundary point with k; the body lies in
    /// the hemisphere of k iff this is >= 0.
    SegmentExtremum min_dot(const Vec3& k) const {
        SegmentExtremum best = segments_[0].min_dot(k);
        for (std::size_t i = 1; i < segments_.size(); ++i) {
            const SegmentExtremum e = segments_[i].min_dot(k);
            if (e.value < best.value) best = e;
        }
        return best;
    }

    /// Split segment i at parameter t (0 < t < 1) into two pieces.
    ConvexBody split(std::size_t i, double t) const {
        const Segment& seg = segments_.at(i);
        const SpherePoint mid = seg.point_at(t);
        std::vector<Segment> out;
        for (std::size_t j = 0; j < segments_.size(); ++j) {
            if (j == i) {
                out.push_back(seg.sub(seg.start(), mid));
                out.push_back(seg.sub(mid, seg.end()));
            } else {
                out.push_back(segments_[j]);
            }
        }
        return ConvexBody(std::move(out));
    }

private:
    double azimuth(const SpherePoint& p) const {
        return std::atan2(dot(p.vec(), frame_.e2), dot(p.vec(), frame_.e1));
    }

    std::size_t sector_of(const SpherePoint& p) const {
        const double a = azimuth(p);
        auto ccw_gap = [](double from, double to) {
            double d = to - from;
            while (d < 0.0) d += 2.0 * pi;
            while (d >= 2.0 * pi) d -= 2.0 * pi;
            return d;
        };
        for (std::size_t i = 0; i < segments_.size(); ++i) {
            const double span = ccw_gap(azimuths_[i], azimuths_[next(i)]);
            if (ccw_gap(azimuths_[i], a) <= span) return i;
        }
        return 0;
    }

    std::vector<Segment> segments_;
    std::vector<double> offsets_;
    std::vector<double> azimuths_;
    double perimeter_ = 0.0;
    SpherePoint interior_;
    TangentFrame frame_;
};

/// Free-function spellings of the body queries.
inline SpherePoint boundary_point(const ConvexBody& body, double s) { return body.boundary_point(s); }
inline bool contains(const ConvexBody& body, const SpherePoint& p) { return body.contains(p); }
inline SupportPair supporting_poles_at(const ConvexBody& body, const SpherePoint& p) {
    return body.supporting_poles_at(p);
}

struct ConvexityReport {
    bool convex = true;
    std::string violation;

    explicit operator bool() const noexcept { return convex; }
};

/// Convexity through local support: every junction turns left, every arc
/// bends toward the interior, and the supporting hemisphere at each sampled
/// boundary point contains the whole body.
inline ConvexityReport is_convex(const ConvexBody& body, int samples_per_segment = 16) {
    auto fail = [](std::string why) { return ConvexityReport{false, std::move(why)}; };
    const auto segs = body.segments();

    for (std::size_t i = 0; i < segs.size(); ++i) {
        const Segment& s = segs[i];
        if (s.is_arc()) {
            if (!(s.radius() < half_pi)) return fail("segment " + std::to_string(i) + ": arc radius >= pi/2");
            if (!s.ccw()) return fail("segment " + std::to_string(i) + ": arc bulges inward");
        }
        const Segment& in = segs[body.prev(i)];
        const Vec3 n_in = in.end_pole().pole.vec();
        const Vec3 n_out = s.start_pole().pole.vec();
        const double turn = std::atan2(dot(cross(n_in, n_out), s.start().vec()), dot(n_in, n_out));
        if (turn < -support_tol) {
            return fail("vertex " + std::to_string(i) + ": boundary turns clockwise");
        }
    }

    if (body.min_dot(body.interior_point().vec()).value <= 0.0) {
        return fail("body is not inside an open hemisphere");
    }

    auto check_pole = [&](const GreatCirclePole& k, std::size_t i) -> std::optional<ConvexityReport> {
        const double h = std::asin(std::clamp(body.min_dot(k.pole.vec()).value, -1.0, 1.0));
        if (h < -support_tol) {
            return fail("segment " + std::to_string(i) + ": supporting hemisphere misses part of the body");
        }
        return std::nullopt;
    };
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const Segment& s = segs[i];
        const int n = s.is_geodesic() ? 1 : samples_per_segment;
        for (int j = 0; j <= n; ++j) {
            if (auto r = check_pole(s.pole_at(static_cast<double>(j) / n), i)) return *r;
        }
    }
    return {};
}

/// Unwraps a chain into a body and rejects it unless it is convex.
inline ConvexBody make_validated(std::vector<Segment> segments) {
    ConvexBody body(std::move(segments));
    if (auto r = is_convex(body); !r) throw Error(ErrorCode::InvalidBody, r.violation);
    return body;
}

/// Piece of the support parametrization: a segment (points move, pole
/// follows) or the fan of supporting poles at the vertex starting a segment.
struct SupportPiece {
    enum class Kind { Fan, Segment };
    Kind kind = Kind::Segment;
    std::size_t segment = 0;  // for a fan: the segment starting at the vertex
    double u0 = 0.0;
    double length = 0.0;
};

/// A boundary point together with one supporting pole there.
struct SupportSample {
    SpherePoint point;
    GreatCirclePole pole;
    std::size_t piece = 0;
    double t = 0.0;
};

/// Cyclic parametrization of all (point, supporting pole) pairs: segment
/// arclength interleaved with vertex fans measured by turning angle.
class SupportCurve {
public:
    explicit SupportCurve(ConvexBody body) : body_(std::move(body)) {
        const ConvexBody& b = body_;
        double u = 0.0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            const Vec3 n_in = b.segment(b.prev(i)).end_pole().pole.vec();
            const Vec3 n_out = b.segment(i).start_pole().pole.vec();
            const double turn = std::atan2(norm(cross(n_in, n_out)), dot(n_in, n_out));
            pieces_.push_back({SupportPiece::Kind::Fan, i, u, turn});
            u += turn;
            pieces_.push_back({SupportPiece::Kind::Segment, i, u, b.segment(i).length()});
            u += b.segment(i).length();
        }
        total_ = u;
    }

    const ConvexBody& body() const noexcept { return body_; }
    std::span<const SupportPiece> pieces() const noexcept { return pieces_; }
    const SupportPiece& piece(std::size_t i) const { return pieces_.at(i); }
    double total() const noexcept { return total_; }
    std::size_t fan_piece(std::size_t segment) const { return 2 * segment; }
    std::size_t segment_piece(std::size_t segment) const { return 2 * segment + 1; }

    SupportSample at_piece(std::size_t piece_index, double t) const {
        const SupportPiece& p = pieces_.at(piece_index);
        const Segment& seg = body_.segment(p.segment);
        if (p.kind == SupportPiece::Kind::Segment) {
            return {seg.point_at(t), seg.pole_at(t), piece_index, t};
        }
        const SpherePoint n_in = body_.segment(body_.prev(p.segment)).end_pole().pole;
        const SpherePoint n_out = seg.start_pole().pole;
        const SpherePoint k = p.length <= degeneracy_tol ? n_out : arc_point(n_in, n_out, t);
        return {seg.start(), {k}, piece_index, t};
    }

    /// Sample at support parameter u (taken modulo the total length).
    SupportSample at(double u) const {
        u -= std::floor(u / total_) * total_;
        std::size_t idx = pieces_.size() - 1;
        for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
            if (pieces_[i + 1].u0 > u) {
                idx = i;
                break;
            }
        }
        const SupportPiece& p = pieces_[idx];
        const double t = p.length > 0.0 ? std::clamp((u - p.u0) / p.length, 0.0, 1.0) : 0.0;
        return at_piece(idx, t);
    }

private:
    ConvexBody body_;
    std::vector<SupportPiece> pieces_;
    double total_ = 0.0;
};

}  // namespace sconvex
