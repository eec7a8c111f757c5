#pragma once

// Approximation of a reduced body by one whose boundary consists of
// butterfly arms and arcs of radius equal to the thickness. Each pair of
// opposite constant-width curves is replaced by chains of circle arcs built
// on a net of thickness chords; a sandwich P c R, R_eps c Q bounds the
// Hausdorff distance.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "sconvex/decomposition.hpp"
#include "sconvex/hull.hpp"
#include "sconvex/metrics.hpp"

namespace sconvex {

/// Points closer than this are treated as the same point of a chord net.
inline constexpr double coincide_tol = 1e-11;

/// Spacing of chord endpoints that keeps the Hausdorff error below eps:
/// arcsin(tan(rho(eps) / 2)) = eps.
inline double rho(double eps) {
    if (!(eps > 0.0 && eps <= half_pi)) {
        throw Error(ErrorCode::EpsOutOfRange, "eps must lie in (0, pi/2]");
    }
    return 2.0 * std::atan(std::sin(eps));
}

struct ChordSelectOptions {
    /// Successive chords must turn by less than pi/2 minus this.
    double angle_margin = 1e-3;
    int max_bisections = 10000;
};

/// Angle between the great circles carrying two chords.
inline double chord_turn(const Chord& a, const Chord& b) {
    return dist(great_circle_pole(a.f, a.g).pole, great_circle_pole(b.f, b.g).pole);
}

namespace detail {

inline Chord chord_from_sample(const ConvexBody& body, const SupportSample& s, double u) {
    const WidthResult w = width_unchecked(body, s.pole);
    return {u, s.point, w.far_point, s.pole, w.width};
}

/// The chords at both ends of a pair, with endpoints taken from the stored
/// boundary vertices rather than re-evaluated.
inline std::pair<Chord, Chord> end_chords(const SupportCurve& sc, const CwPair& pair) {
    const ConvexBody& body = sc.body();
    const PairRange r = pair_range(sc, pair);
    SupportSample first;
    SupportSample last;
    if (pair.f_vertex) {
        first = sc.at_piece(sc.fan_piece(*pair.f_vertex), 0.0);
        last = sc.at_piece(sc.fan_piece(*pair.f_vertex), 1.0);
    } else {
        const std::size_t a = pair.f_segments.front();
        const std::size_t b = pair.f_segments.back();
        first = pair.f_lead_fan ? sc.at_piece(sc.fan_piece(a), 0.0) : sc.at_piece(sc.segment_piece(a), 0.0);
        last = pair.f_trail_fan ? sc.at_piece(sc.fan_piece(body.next(b)), 1.0)
                                : sc.at_piece(sc.segment_piece(b), 1.0);
        // the trailing fan sits at the start of the next segment; keep f'' exact
        if (pair.f_trail_fan) last.point = body.segment(b).end();
    }
    Chord c0 = chord_from_sample(body, first, r.u0);
    Chord c1 = chord_from_sample(body, last, r.u1);
    const auto [g0, g1] = g_endpoints(body, pair);
    if (dist(c0.g, g0) <= 1e-7) c0.g = g0;
    if (dist(c1.g, g1) <= 1e-7) c1.g = g1;
    return {c0, c1};
}

}  // namespace detail

/// Thickness chords of a pair, refined by bisection of the support parameter
/// until neighbouring endpoints are at most eps apart and neighbouring chords
/// turn by less than pi/2 - margin.
inline std::vector<Chord> select_chords(const ConvexBody& body, const CwPair& pair, double eps,
                                        const ChordSelectOptions& opt = {}) {
    if (!(eps > 0.0 && eps < half_pi)) {
        throw Error(ErrorCode::EpsOutOfRange, "eps must lie in (0, pi/2)");
    }
    const SupportCurve sc(body);
    const auto [first, last] = detail::end_chords(sc, pair);

    auto acceptable = [&](const Chord& a, const Chord& b) {
        return dist(a.f, b.f) <= eps && dist(a.g, b.g) <= eps && chord_turn(a, b) < half_pi - opt.angle_margin;
    };

    std::vector<Chord> out{first};
    std::vector<Chord> pending{last};
    int bisections = 0;
    while (!pending.empty()) {
        const Chord& a = out.back();
        const Chord& b = pending.back();
        if (acceptable(a, b)) {
            out.push_back(b);
            pending.pop_back();
            continue;
        }
        if (++bisections > opt.max_bisections || !(b.u - a.u > 1e-14 * sc.total())) {
            throw Error(ErrorCode::RefinementDiverged, "chord refinement did not terminate");
        }
        const double u = 0.5 * (a.u + b.u);
        pending.push_back(detail::chord_from_sample(body, sc.at(u), u));
    }
    return out;
}

/// Construction data for one pair: chords, chord crossings, the apexes c_i
/// and the replacement arcs, plus the corner points used by the certificate.
struct ChordNet {
    double delta = 0.0;
    std::vector<Chord> chords;               // f_i g_i, i = 1..n
    std::vector<SpherePoint> o;              // n - 1 chord crossings
    std::vector<double> phi;                 // angle f_i o_i f_{i+1}
    std::vector<double> gamma;               // angle g_i o_i g_{i+1}
    std::vector<SpherePoint> c;              // c_0 .. c_n
    std::vector<std::optional<Segment>> f_arcs;  // F_1 .. F_{n-1}; empty when f_i = f_{i+1}
    std::vector<std::optional<Segment>> g_arcs;  // G_1 .. G_n; empty when c_{i-1} = c_i
    std::vector<SpherePoint> k;              // F-side corners
    std::vector<SpherePoint> l;              // G-side corners

    std::size_t size() const noexcept { return chords.size(); }
};

namespace detail {

inline bool same_point(const SpherePoint& a, const SpherePoint& b) { return dist(a, b) <= coincide_tol; }

inline double angle_or_zero(const SpherePoint& v, const SpherePoint& p, const SpherePoint& q) {
    if (same_point(v, p) || same_point(v, q) || same_point(p, q)) return 0.0;
    return angle_at(v, p, q);
}

/// Meeting point of the great circles with the given poles, on the side of
/// `near`; falls back to `fallback` when the circles coincide.
inline SpherePoint crossing_near(const Vec3& p1, const Vec3& p2, const Vec3& near, const SpherePoint& fallback) {
    const Vec3 x = cross(p1, p2);
    if (norm(x) <= degeneracy_tol) return fallback;
    return SpherePoint(dot(x, near) >= 0.0 ? x : -x);
}

inline SpherePoint midpoint(const SpherePoint& a, const SpherePoint& b) { return SpherePoint(a.vec() + b.vec()); }

/// Corner of the two supporting circles orthogonal to neighbouring chords at
/// a and b (tangent poles ta, tb).
inline SpherePoint corner(const SpherePoint& a, const SpherePoint& b, const Vec3& ta, const Vec3& tb) {
    if (same_point(a, b)) return a;
    return crossing_near(ta, tb, a.vec() + b.vec(), midpoint(a, b));
}

}  // namespace detail

/// Apexes c_i and chord crossings for a chord sequence.
inline ChordNet build_scaffold(const std::vector<Chord>& chords, double delta) {
    using detail::same_point;
    if (chords.size() < 2) throw Error(ErrorCode::ScaffoldFailed, "a chord net needs at least two chords");
    ChordNet net;
    net.delta = delta;
    net.chords = chords;
    const std::size_t n = chords.size();

    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Chord& a = chords[i];
        const Chord& b = chords[i + 1];
        SpherePoint o;
        if (same_point(a.f, b.f)) {
            o = a.f;
        } else if (same_point(a.g, b.g)) {
            o = a.g;
        } else {
            const Vec3 pa = great_circle_pole(a.f, a.g).pole.vec();
            const Vec3 pb = great_circle_pole(b.f, b.g).pole.vec();
            o = detail::crossing_near(pa, pb, a.f.vec() + a.g.vec() + b.f.vec() + b.g.vec(),
                                      detail::midpoint(a.f, a.g));
        }
        net.o.push_back(o);
        net.phi.push_back(detail::angle_or_zero(o, a.f, b.f));
        net.gamma.push_back(detail::angle_or_zero(o, a.g, b.g));
    }

    net.c.push_back(chords.front().g);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Chord& a = chords[i];
        const Chord& b = chords[i + 1];
        if (same_point(a.g, b.g)) {
            net.c.push_back(a.g);
        } else if (same_point(a.f, b.f)) {
            const Vec3 bis = tangent_toward(a.f, a.g) + tangent_toward(a.f, b.g);
            if (norm(bis) <= degeneracy_tol) {
                throw Error(ErrorCode::ScaffoldFailed, "opposite chords at a shared endpoint");
            }
            net.c.push_back(SpherePoint(a.f.vec() * std::cos(delta) + bis / norm(bis) * std::sin(delta)));
        } else {
            try {
                // first point: left of f_i -> f_{i+1}, the side of the opposite curve
                net.c.push_back(circle_circle_intersection(a.f, delta, b.f, delta).front());
            } catch (const Error& e) {
                throw Error(ErrorCode::ScaffoldFailed, std::string("apex circles: ") + e.what());
            }
        }
    }
    net.c.push_back(chords.back().g);

    auto arc = [&](const SpherePoint& center, const SpherePoint& from, const SpherePoint& to) -> std::optional<Segment> {
        if (same_point(from, to)) return std::nullopt;
        try {
            Segment s = Segment::circle_arc(center, delta, from, to, true);
            if (s.sweep() > pi) throw Error(ErrorCode::ScaffoldFailed, "replacement arc bends the wrong way");
            return s;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ScaffoldFailed) throw;
            throw Error(ErrorCode::ScaffoldFailed, std::string("replacement arc: ") + e.what());
        }
    };
    for (std::size_t i = 0; i + 1 < n; ++i) net.f_arcs.push_back(arc(net.c[i + 1], chords[i].f, chords[i + 1].f));
    for (std::size_t i = 0; i < n; ++i) net.g_arcs.push_back(arc(chords[i].f, net.c[i], net.c[i + 1]));

    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Chord& a = chords[i];
        const Chord& b = chords[i + 1];
        net.k.push_back(detail::corner(a.f, b.f, tangent_toward(a.f, a.g), tangent_toward(b.f, b.g)));
        net.l.push_back(detail::corner(a.g, b.g, tangent_toward(a.g, a.f), tangent_toward(b.g, b.f)));
    }
    return net;
}

struct Replacement {
    std::vector<Segment> f_star;
    std::vector<Segment> g_star;
};

inline Replacement build_replacement(const ChordNet& net) {
    Replacement r;
    for (const auto& s : net.f_arcs) {
        if (s) r.f_star.push_back(*s);
    }
    for (const auto& s : net.g_arcs) {
        if (s) r.g_star.push_back(*s);
    }
    return r;
}

struct Certificate {
    double bound = 0.0;
    bool holds = false;
    std::vector<std::string> failures;
    std::optional<ConvexBody> p;  // hull of all chord endpoints and arm endpoints
    double min_corner_angle = pi; // smallest non-degenerate angle f_i k_i f_{i+1}
};

namespace detail {

inline double side_of(const SpherePoint& a, const SpherePoint& b, const SpherePoint& x) {
    const Vec3 n = cross(a, b);
    return dot(n, x.vec()) / norm(n);
}

}  // namespace detail

/// Membership in the spherical triangle abc; a collapsed triangle counts as
/// the union of its sides.
inline bool in_triangle(const SpherePoint& x, const SpherePoint& a, const SpherePoint& b, const SpherePoint& c,
                        double tol) {
    const double det = dot(cross(a, b), c.vec());
    const double scale = std::min({dist(a, b), dist(b, c), dist(c, a)});
    if (std::abs(det) <= 1e-14 || scale <= coincide_tol) {
        const double d = std::min({dist_point_to_geodesic_arc(x, a, b), dist_point_to_geodesic_arc(x, b, c),
                                   dist_point_to_geodesic_arc(x, c, a)});
        return d <= tol;
    }
    const double s = det > 0.0 ? 1.0 : -1.0;
    return s * detail::side_of(a, b, x) >= -tol && s * detail::side_of(b, c, x) >= -tol &&
           s * detail::side_of(c, a, x) >= -tol;
}

struct CertificateOptions {
    double membership_tol = 1e-9;
    int samples_per_arc = 16;
    int boundary_samples = 2048;
};

/// Sandwich certificate: corners k_i, l_i bound how far the boundary between
/// neighbouring chord endpoints can stray from the chord, and P c body, R_eps
/// c Q is checked on samples.
inline Certificate evaluate_certificate(const ConvexBody& body, const ConvexBody& r_eps,
                                        const std::vector<ChordNet>& nets, const Decomposition& dec,
                                        double eps, const CertificateOptions& opt = {}) {
    Certificate cert;
    auto fail = [&](std::string why) { cert.failures.push_back(std::move(why)); };

    struct Tri {
        SpherePoint a, apex, b;
    };
    std::vector<Tri> tris;
    std::vector<SpherePoint> hull_pts;

    for (std::size_t ni = 0; ni < nets.size(); ++ni) {
        const ChordNet& net = nets[ni];
        const std::string tag = "pair " + std::to_string(ni);
        for (const Chord& ch : net.chords) {
            hull_pts.push_back(ch.f);
            hull_pts.push_back(ch.g);
        }
        for (std::size_t i = 0; i + 1 < net.size(); ++i) {
            const SpherePoint& f0 = net.chords[i].f;
            const SpherePoint& f1 = net.chords[i + 1].f;
            const SpherePoint& g0 = net.chords[i].g;
            const SpherePoint& g1 = net.chords[i + 1].g;
            const double dk = dist_point_to_geodesic_arc(net.k[i], f0, f1);
            const double dl = dist_point_to_geodesic_arc(net.l[i], g0, g1);
            cert.bound = std::max({cert.bound, dk, dl});

            for (const auto& [p0, p1, corner, d] :
                 {std::tuple{f0, f1, net.k[i], dk}, std::tuple{g0, g1, net.l[i], dl}}) {
                if (detail::same_point(p0, p1) || detail::same_point(corner, p0) || detail::same_point(corner, p1)) {
                    continue;
                }
                const double apex = angle_at(corner, p0, p1);
                cert.min_corner_angle = std::min(cert.min_corner_angle, apex);
                if (!(apex > half_pi)) {
                    fail(tag + " chord " + std::to_string(i) + ": corner angle not obtuse");
                    continue;
                }
                const double chord = dist(p0, p1);
                const double outer = std::asin(std::min(1.0, std::tan(chord / 2.0)));
                if (apex < pi - 1e-12) {
                    const double inner = lemma2_bound(chord, apex);
                    if (d > inner + 1e-9 || inner > outer + 1e-12) {
                        fail(tag + " chord " + std::to_string(i) + ": corner distance exceeds its bound");
                    }
                } else if (d > 1e-9) {
                    fail(tag + " chord " + std::to_string(i) + ": straight corner off the chord");
                }
            }
            tris.push_back({f0, net.k[i], f1});
            tris.push_back({g0, net.l[i], g1});

            if (const auto& s = net.f_arcs[i]) {
                for (int j = 0; j <= opt.samples_per_arc; ++j) {
                    const SpherePoint x = s->point_at(static_cast<double>(j) / opt.samples_per_arc);
                    if (!in_triangle(x, f0, net.k[i], f1, opt.membership_tol)) {
                        fail(tag + " arc F_" + std::to_string(i + 1) + " leaves its triangle");
                        break;
                    }
                }
            }
        }
        // G_i lies in the triangles at its two ends
        const std::size_t m = net.size() - 1;
        for (std::size_t i = 0; i < net.size(); ++i) {
            const auto& s = net.g_arcs[i];
            if (!s) continue;
            for (int j = 0; j <= opt.samples_per_arc; ++j) {
                const SpherePoint x = s->point_at(static_cast<double>(j) / opt.samples_per_arc);
                bool inside = false;
                for (std::size_t t : {i - 1, i}) {
                    if (t >= m) continue;
                    inside = inside || in_triangle(x, net.chords[t].g, net.l[t], net.chords[t + 1].g,
                                                   opt.membership_tol);
                }
                if (!inside) {
                    fail(tag + " arc G_" + std::to_string(i + 1) + " leaves its triangles");
                    break;
                }
            }
        }
    }

    for (const Feature& f : dec.features) {
        if (const auto* arm = std::get_if<ArmFeature>(&f)) {
            for (std::size_t s : arm->segments) {
                hull_pts.push_back(body.segment(s).start());
                hull_pts.push_back(body.segment(s).end());
            }
        }
    }

    if (cert.bound > eps) fail("certified bound exceeds eps");

    try {
        cert.p = spherical_hull(hull_pts);
    } catch (const Error& e) {
        fail(std::string("hull P: ") + e.what());
    }
    if (cert.p) {
        const ConvexBody& p = *cert.p;
        for (const Segment& s : p.segments()) {
            if (point_to_body(s.start(), body) > opt.membership_tol) fail("P is not inside the body");
            if (point_to_body(s.start(), r_eps) > opt.membership_tol) fail("P is not inside R_eps");
        }
        auto in_q = [&](const SpherePoint& x) {
            if (point_to_body(x, p) <= opt.membership_tol) return true;
            return std::any_of(tris.begin(), tris.end(),
                               [&](const Tri& t) { return in_triangle(x, t.a, t.apex, t.b, opt.membership_tol); });
        };
        for (const auto* b : {&body, &r_eps}) {
            for (int j = 0; j < opt.boundary_samples; ++j) {
                const SpherePoint x = b->boundary_point(static_cast<double>(j) / opt.boundary_samples);
                if (!in_q(x)) {
                    fail(b == &body ? "body is not inside Q" : "R_eps is not inside Q");
                    break;
                }
            }
        }
    }
    cert.holds = cert.failures.empty();
    return cert;
}

/// Throwing form of the certificate check.
inline Certificate sandwich_certificate(const ConvexBody& body, const ConvexBody& r_eps,
                                        const std::vector<ChordNet>& nets, const Decomposition& dec, double eps,
                                        const CertificateOptions& opt = {}) {
    Certificate cert = evaluate_certificate(body, r_eps, nets, dec, eps, opt);
    if (!cert.holds) throw Error(ErrorCode::CertificateFailed, cert.failures.front());
    return cert;
}

struct ApproxReport {
    double eps = 0.0;
    double delta_in = 0.0;
    double delta_out = 0.0;
    std::optional<double> constant_width_dev;
    double certified_bound = 0.0;
    double measured_hausdorff = 0.0;
    std::vector<std::size_t> n_chords;
    bool certificate_holds = false;
    std::vector<std::string> certificate_failures;
};

struct ApproxResult {
    ConvexBody body;
    std::vector<ChordNet> nets;
    ApproxReport report;
    Certificate certificate;
};

struct ApproxOptions {
    /// Nominal thickness of the input (e.g. a generator parameter). Used as
    /// the arc radius when it agrees with the measured thickness.
    std::optional<double> delta_hint;
    ChordSelectOptions chords;
    CertificateOptions certificate;
    int hausdorff_samples = 2048;
};

namespace detail {

/// The arc radius of the output: the nominal thickness when it matches, else
/// an input arc radius that matches, else the measured value.
inline double choose_delta(const ConvexBody& body, const Decomposition& dec, double measured,
                           const std::optional<double>& hint) {
    if (hint && std::abs(*hint - measured) <= 1e-8) return *hint;
    for (const CwPair& p : dec.pairs()) {
        for (const auto* segs : {&p.f_segments, &p.g_segments}) {
            for (std::size_t s : *segs) {
                const Segment& seg = body.segment(s);
                if (seg.is_arc() && std::abs(seg.radius() - measured) <= 1e-9) return seg.radius();
            }
        }
    }
    return measured;
}

/// The body with the first `count` pairs replaced.
inline ConvexBody splice(const ConvexBody& body, const std::vector<CwPair>& pairs,
                         const std::vector<Replacement>& reps, std::size_t count) {
    std::vector<int> f_owner(body.size(), -1);
    std::vector<int> g_owner(body.size(), -1);
    for (std::size_t p = 0; p < count; ++p) {
        for (std::size_t s : pairs[p].f_segments) f_owner[s] = static_cast<int>(p);
        for (std::size_t s : pairs[p].g_segments) g_owner[s] = static_cast<int>(p);
    }
    std::vector<Segment> out;
    auto append = [&](const std::vector<Segment>& segs) { out.insert(out.end(), segs.begin(), segs.end()); };
    for (std::size_t i = 0; i < body.size(); ++i) {
        for (std::size_t p = 0; p < count; ++p) {
            if (pairs[p].f_vertex == i) append(reps[p].f_star);
            if (pairs[p].g_vertex == i) append(reps[p].g_star);
        }
        if (f_owner[i] >= 0) {
            const auto p = static_cast<std::size_t>(f_owner[i]);
            if (pairs[p].f_segments.front() == i) append(reps[p].f_star);
        } else if (g_owner[i] >= 0) {
            const auto p = static_cast<std::size_t>(g_owner[i]);
            if (pairs[p].g_segments.front() == i) append(reps[p].g_star);
        } else {
            out.push_back(body.segment(i));
        }
    }
    return ConvexBody(std::move(out));
}

}  // namespace detail

/// Replaces every pair of opposite constant-width curves by arcs of radius
/// equal to the thickness, keeping the arms. The certificate is evaluated but
/// not enforced; see ApproxReport::certificate_holds.
inline ApproxResult approximate(const ConvexBody& body, const Decomposition& dec, double eps,
                                const ApproxOptions& opt = {}) {
    if (!(eps > 0.0 && eps < half_pi)) {
        throw Error(ErrorCode::EpsOutOfRange, "eps must lie in (0, pi/2)");
    }
    const double measured = thickness(body).delta;
    if (!(measured < half_pi)) throw Error(ErrorCode::ThicknessOutOfRegime, "thickness is not below pi/2");
    const double delta = detail::choose_delta(body, dec, measured, opt.delta_hint);

    const std::vector<CwPair> pairs = dec.pairs();
    std::vector<ChordNet> nets;
    std::vector<Replacement> reps;
    for (const CwPair& pair : pairs) {
        nets.push_back(build_scaffold(select_chords(body, pair, eps, opt.chords), delta));
        reps.push_back(build_replacement(nets.back()));
    }

    ConvexBody out = body;
    for (std::size_t j = 1; j <= pairs.size(); ++j) {
        try {
            out = detail::splice(body, pairs, reps, j);
        } catch (const Error& e) {
            throw Error(ErrorCode::ConvexityLost, "splice " + std::to_string(j) + ": " + e.what());
        }
        if (auto r = is_convex(out); !r) {
            throw Error(ErrorCode::ConvexityLost, "splice " + std::to_string(j) + ": " + r.violation);
        }
    }

    ApproxReport rep;
    rep.eps = eps;
    rep.delta_in = delta;
    rep.delta_out = pairs.empty() ? measured : thickness(out).delta;
    for (const ChordNet& n : nets) rep.n_chords.push_back(n.size());
    if (is_constant_width(body, 1e-7).constant) rep.constant_width_dev = is_constant_width(out, 1e-6).max_deviation;

    Certificate cert;
    if (pairs.empty()) {
        cert.holds = true;
    } else {
        cert = evaluate_certificate(body, out, nets, dec, eps, opt.certificate);
    }
    rep.certified_bound = cert.bound;
    rep.certificate_holds = cert.holds;
    rep.certificate_failures = cert.failures;
    rep.measured_hausdorff = pairs.empty() ? 0.0 : hausdorff(body, out, opt.hausdorff_samples).value;
    return {std::move(out), std::move(nets), std::move(rep), std::move(cert)};
}

}  // namespace sconvex
