#pragma once

// Boundary structure of a reduced body: butterfly arms plus pairs of
// opposite curves of constant width, each pair joined by thickness chords.

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

#include "sconvex/width.hpp"

namespace sconvex {

/// Consecutive geodesic segments forming one butterfly arm.
struct ArmFeature {
    std::vector<std::size_t> segments;
};

/// A pair of opposite curves F and G. A curve is either a run of segments or
/// a single vertex (given as the index of the segment starting there). The
/// fan flags say whether the supporting hemispheres at the first/last vertex
/// of F belong to F; chords are parametrized over F.
struct CwPair {
    std::vector<std::size_t> f_segments;
    std::vector<std::size_t> g_segments;
    std::optional<std::size_t> f_vertex;
    std::optional<std::size_t> g_vertex;
    bool f_lead_fan = false;
    bool f_trail_fan = false;
};

using Feature = std::variant<ArmFeature, CwPair>;

struct Decomposition {
    std::vector<Feature> features;

    /// No pair of constant-width curves: the boundary is arms only.
    bool trivial() const {
        return std::none_of(features.begin(), features.end(),
                            [](const Feature& f) { return std::holds_alternative<CwPair>(f); });
    }

    std::vector<CwPair> pairs() const {
        std::vector<CwPair> out;
        for (const Feature& f : features) {
            if (const auto* p = std::get_if<CwPair>(&f)) out.push_back(*p);
        }
        return out;
    }
};

/// Two arms a1a2 and b1b2 crossing at `center`.
struct Butterfly {
    Segment arm_a;
    Segment arm_b;
    SpherePoint center;
};

inline Butterfly make_butterfly(const Segment& arm_a, const Segment& arm_b) {
    if (!arm_a.is_geodesic() || !arm_b.is_geodesic()) {
        throw Error(ErrorCode::DecompositionFailed, "butterfly arms must be geodesic");
    }
    // shared endpoint: degenerate butterfly whose triangles collapse
    for (const SpherePoint& p : {arm_a.start(), arm_a.end()}) {
        for (const SpherePoint& q : {arm_b.start(), arm_b.end()}) {
            if (dist(p, q) <= support_tol) return {arm_a, arm_b, p};
        }
    }
    const Vec3 x = cross(great_circle_pole(arm_a.start(), arm_a.end()).pole,
                         great_circle_pole(arm_b.start(), arm_b.end()).pole);
    for (const SpherePoint& c : {SpherePoint(x), SpherePoint(-x)}) {
        if (arm_a.distance_to(c) <= support_tol && arm_b.distance_to(c) <= support_tol) {
            return {arm_a, arm_b, c};
        }
    }
    throw Error(ErrorCode::DecompositionFailed, "arms do not cross");
}

/// Support-parameter interval [u0, u1] of the F curve (u1 may exceed the
/// total length when F wraps past segment 0).
struct PairRange {
    double u0 = 0.0;
    double u1 = 0.0;
};

inline PairRange pair_range(const SupportCurve& sc, const CwPair& pair) {
    if (pair.f_vertex) {
        const SupportPiece& fan = sc.piece(sc.fan_piece(*pair.f_vertex));
        return {fan.u0, fan.u0 + fan.length};
    }
    if (pair.f_segments.empty()) {
        throw Error(ErrorCode::DecompositionFailed, "pair has an empty F curve");
    }
    const SupportPiece& first = sc.piece(sc.segment_piece(pair.f_segments.front()));
    const SupportPiece& last = sc.piece(sc.segment_piece(pair.f_segments.back()));
    double u0 = first.u0;
    if (pair.f_lead_fan) u0 -= sc.piece(sc.fan_piece(pair.f_segments.front())).length;
    double u1 = last.u0 + last.length;
    if (pair.f_trail_fan) {
        u1 += sc.piece(sc.fan_piece(sc.body().next(pair.f_segments.back()))).length;
    }
    if (u0 < 0.0) {
        u0 += sc.total();
        u1 += sc.total();
    }
    if (u1 <= u0) u1 += sc.total();
    return {u0, u1};
}

/// One thickness chord of a pair, parametrized on the support curve.
struct Chord {
    double u = 0.0;
    SpherePoint f;
    SpherePoint g;
    GreatCirclePole pole;  // supporting hemisphere at f
    double width = 0.0;
};

inline Chord chord_at(const SupportCurve& sc, double u) {
    const SupportSample s = sc.at(u);
    const WidthResult w = detail::width_unchecked(sc.body(), s.pole);
    return {u, s.point, w.far_point, s.pole, w.width};
}

/// Start and end points of the G curve of a pair.
inline std::pair<SpherePoint, SpherePoint> g_endpoints(const ConvexBody& body, const CwPair& pair) {
    if (pair.g_vertex) {
        const SpherePoint& v = body.segment(*pair.g_vertex).start();
        return {v, v};
    }
    return {body.segment(pair.g_segments.front()).start(), body.segment(pair.g_segments.back()).end()};
}

/// Checks the chord correspondence of a pair on `samples` chords: every
/// chord has length delta and ends on G.
inline bool pair_is_consistent(const ConvexBody& body, const CwPair& pair, double delta,
                               int samples = 64, double tol = 1e-8) {
    const SupportCurve sc(body);
    const PairRange r = pair_range(sc, pair);
    for (int i = 0; i <= samples; ++i) {
        const Chord c = chord_at(sc, r.u0 + (r.u1 - r.u0) * i / samples);
        if (std::abs(dist(c.f, c.g) - delta) > tol) return false;
        if (pair.g_vertex) {
            if (dist(c.g, body.segment(*pair.g_vertex).start()) > tol) return false;
        } else {
            const bool on_g = std::any_of(pair.g_segments.begin(), pair.g_segments.end(), [&](std::size_t j) {
                return body.segment(j).distance_to(c.g) <= tol;
            });
            if (!on_g) return false;
        }
    }
    return true;
}

struct DecomposeOptions {
    /// Widths within this of the thickness count as constant-width points.
    double width_tol = 1e-7;
    int samples_per_piece = 8;
};

struct Decomposed {
    ConvexBody body;  // may have one segment split at a chord endpoint
    Decomposition decomposition;
    double delta = 0.0;
};

namespace detail {

enum class PieceClass { Arm, ConstantWidth, Excess, Empty };

inline Decomposed split_constant_width(const ConvexBody& input, double delta) {
    ConvexBody body = input;
    const GreatCirclePole k = body.segment(0).start_pole();
    const SpherePoint far = width_unchecked(body, k).far_point;
    auto loc = body.locate(far, support_tol);
    if (!loc) throw Error(ErrorCode::DecompositionFailed, "chord endpoint is off the boundary");
    if (!loc->at_vertex) {
        body = body.split(loc->segment, loc->t);
        loc = BoundaryLocation{loc->segment + 1, 0.0, true};
    }
    const std::size_t j = loc->segment;
    if (j == 0) throw Error(ErrorCode::DecompositionFailed, "degenerate thickness chord");
    CwPair pair;
    for (std::size_t i = 0; i < j; ++i) pair.f_segments.push_back(i);
    for (std::size_t i = j; i < body.size(); ++i) pair.g_segments.push_back(i);
    const SpherePoint back = width_unchecked(body, body.segment(j - 1).end_pole()).far_point;
    if (dist(back, body.segment(0).start()) > 1e-7) {
        throw Error(ErrorCode::DecompositionFailed, "chords at the split do not close up");
    }
    return {std::move(body), Decomposition{{pair}}, delta};
}

}  // namespace detail

/// Splits the boundary into butterfly arms and pairs of opposite
/// constant-width curves. The input is assumed to be reduced; for a
/// constant-width body the split is at the chord through the start of
/// segment 0.
inline Decomposed decompose(const ConvexBody& body, const DecomposeOptions& opt = {}) {
    using detail::PieceClass;
    const double delta = thickness(body).delta;
    const SupportCurve sc(body);
    const auto pieces = sc.pieces();

    std::vector<PieceClass> cls(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const SupportPiece& p = pieces[i];
        if (p.kind == SupportPiece::Kind::Segment && body.segment(p.segment).is_geodesic()) {
            cls[i] = PieceClass::Arm;
            continue;
        }
        if (p.length <= degeneracy_tol) {
            cls[i] = PieceClass::Empty;
            continue;
        }
        int flat = 0;
        int excess = 0;
        for (int j = 0; j < opt.samples_per_piece; ++j) {
            const double t = (j + 0.5) / opt.samples_per_piece;
            const double w = detail::width_unchecked(body, sc.at_piece(i, t).pole).width;
            if (std::abs(w - delta) <= opt.width_tol) {
                ++flat;
            } else if (w - delta > opt.width_tol) {
                ++excess;
            }
        }
        if (flat > 0 && excess > 0) {
            throw Error(ErrorCode::DecompositionFailed,
                        "a segment or vertex mixes constant-width and excess-width hemispheres");
        }
        cls[i] = flat > 0 ? PieceClass::ConstantWidth : PieceClass::Excess;
    }

    const bool any_arm = std::count(cls.begin(), cls.end(), PieceClass::Arm) > 0;
    const bool any_excess = std::count(cls.begin(), cls.end(), PieceClass::Excess) > 0;
    const bool any_cw = std::count(cls.begin(), cls.end(), PieceClass::ConstantWidth) > 0;

    if (!any_arm && !any_excess) return detail::split_constant_width(body, delta);

    for (std::size_t i = 0; i < body.size(); ++i) {
        if (cls[sc.segment_piece(i)] == PieceClass::Excess) {
            throw Error(ErrorCode::DecompositionFailed,
                        "boundary arc " + std::to_string(i) + " is neither an arm nor of constant width");
        }
    }

    // maximal runs of constant-width pieces; empty fans are transparent
    const std::size_t n = pieces.size();
    std::size_t start = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (cls[i] == PieceClass::Arm || cls[i] == PieceClass::Excess) {
            start = i;
            break;
        }
    }
    std::vector<std::vector<std::size_t>> runs;
    std::vector<std::size_t> current;
    auto flush = [&] {
        while (!current.empty() && cls[current.back()] == PieceClass::Empty) current.pop_back();
        std::size_t lead = 0;
        while (lead < current.size() && cls[current[lead]] == PieceClass::Empty) ++lead;
        current.erase(current.begin(), current.begin() + static_cast<std::ptrdiff_t>(lead));
        if (!current.empty()) runs.push_back(current);
        current.clear();
    };
    for (std::size_t k = 1; k <= n && any_cw; ++k) {
        const std::size_t i = (start + k) % n;
        if (cls[i] == PieceClass::ConstantWidth || cls[i] == PieceClass::Empty) {
            current.push_back(i);
        } else {
            flush();
        }
    }
    flush();

    auto run_of_piece = [&](std::size_t piece) -> std::optional<std::size_t> {
        for (std::size_t r = 0; r < runs.size(); ++r) {
            if (std::find(runs[r].begin(), runs[r].end(), piece) != runs[r].end()) return r;
        }
        return std::nullopt;
    };
    auto run_of_point = [&](const SpherePoint& p) -> std::optional<std::size_t> {
        const auto loc = body.locate(p, 1e-8);
        if (!loc) return std::nullopt;
        if (!loc->at_vertex) return run_of_piece(sc.segment_piece(loc->segment));
        for (std::size_t piece : {sc.fan_piece(loc->segment), sc.segment_piece(loc->segment),
                                  sc.segment_piece(body.prev(loc->segment))}) {
            if (auto r = run_of_piece(piece)) return r;
        }
        return std::nullopt;
    };

    std::vector<std::optional<std::size_t>> partner(runs.size());
    for (std::size_t r = 0; r < runs.size(); ++r) {
        const std::size_t mid = runs[r][runs[r].size() / 2];
        const SpherePoint far = detail::width_unchecked(body, sc.at_piece(mid, 0.5).pole).far_point;
        partner[r] = run_of_point(far);
    }

    auto segments_of = [&](const std::vector<std::size_t>& run) {
        std::vector<std::size_t> segs;
        for (std::size_t piece : run) {
            if (pieces[piece].kind == SupportPiece::Kind::Segment) segs.push_back(pieces[piece].segment);
        }
        return segs;
    };

    std::vector<CwPair> pairs;
    std::vector<bool> used(runs.size(), false);
    for (std::size_t r = 0; r < runs.size(); ++r) {
        if (used[r]) continue;
        const auto q = partner[r];
        if (!q || *q == r || !partner[*q] || *partner[*q] != r || used[*q]) {
            throw Error(ErrorCode::DecompositionFailed, "constant-width curves cannot be paired");
        }
        used[r] = used[*q] = true;
        CwPair pair;
        const auto f_segs = segments_of(runs[r]);
        const auto g_segs = segments_of(runs[*q]);
        if (f_segs.empty()) {
            pair.f_vertex = pieces[runs[r].front()].segment;
        } else {
            pair.f_segments = f_segs;
            pair.f_lead_fan = pieces[runs[r].front()].kind == SupportPiece::Kind::Fan;
            pair.f_trail_fan = pieces[runs[r].back()].kind == SupportPiece::Kind::Fan;
        }
        if (g_segs.empty()) {
            pair.g_vertex = pieces[runs[*q].front()].segment;
        } else {
            pair.g_segments = g_segs;
        }

        const PairRange range = pair_range(sc, pair);
        const auto [g_start, g_end] = g_endpoints(body, pair);
        if (dist(chord_at(sc, range.u0).g, g_start) > 1e-7 || dist(chord_at(sc, range.u1).g, g_end) > 1e-7) {
            throw Error(ErrorCode::DecompositionFailed, "chords at the curve ends miss the opposite curve");
        }
        pairs.push_back(pair);
    }

    // features in boundary order; a pair is listed where its F curve starts
    Decomposition dec;
    std::vector<int> owner(body.size(), -1);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        for (std::size_t s : pairs[p].f_segments) owner[s] = static_cast<int>(p);
        for (std::size_t s : pairs[p].g_segments) owner[s] = static_cast<int>(p);
    }
    std::vector<bool> emitted(pairs.size(), false);
    auto emit_pair = [&](std::size_t p) {
        if (!emitted[p]) {
            dec.features.emplace_back(pairs[p]);
            emitted[p] = true;
        }
    };
    for (std::size_t i = 0; i < body.size(); ++i) {
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (pairs[p].f_vertex == i) emit_pair(p);
        }
        if (owner[i] >= 0) {
            emit_pair(static_cast<std::size_t>(owner[i]));
            continue;
        }
        if (!body.segment(i).is_geodesic()) {
            throw Error(ErrorCode::DecompositionFailed, "boundary arc " + std::to_string(i) + " is unclaimed");
        }
        auto* arm = dec.features.empty() ? nullptr : std::get_if<ArmFeature>(&dec.features.back());
        if (arm && arm->segments.back() == body.prev(i)) {
            arm->segments.push_back(i);
        } else {
            dec.features.emplace_back(ArmFeature{{i}});
        }
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) emit_pair(p);
    // an arm running through the start of segment 0 is one feature
    if (dec.features.size() > 1) {
        auto* head = std::get_if<ArmFeature>(&dec.features.front());
        auto* tail = std::get_if<ArmFeature>(&dec.features.back());
        if (head && tail && head->segments.front() == 0 && tail->segments.back() == body.size() - 1) {
            tail->segments.insert(tail->segments.end(), head->segments.begin(), head->segments.end());
            dec.features.erase(dec.features.begin());
        }
    }
    return {body, std::move(dec), delta};
}

}  // namespace sconvex
