#pragma once

// JSON body files ("sconvex-1") and approximation reports. Output is
// canonical: keys sorted, reals printed with 17 significant digits, so a
// save/load/save cycle is byte-identical.

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sconvex/approx.hpp"

namespace sconvex {

using Json = nlohmann::json;

inline constexpr const char* body_format_tag = "sconvex-1";

struct BodyMetadata {
    std::optional<double> thickness;
    std::string generator;
    Json parameters = Json::object();
};

struct BodyFile {
    ConvexBody body;
    std::optional<Decomposition> decomposition;
    BodyMetadata metadata;
};

namespace detail {

inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    // keep reals recognizable as reals
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

inline void write_canonical(std::ostringstream& os, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {  // std::map order: sorted keys
                if (!first) os << ",\n";
                first = false;
                os << inner << Json(it.key()).dump() << ": ";
                write_canonical(os, it.value(), indent + 1);
            }
            os << "\n" << pad << "}";
            return;
        }
        case Json::value_t::array: {
            const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
            if (j.empty()) {
                os << "[]";
            } else if (flat) {
                os << "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) os << ", ";
                    write_canonical(os, j[i], indent + 1);
                }
                os << "]";
            } else {
                os << "[\n";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) os << ",\n";
                    os << inner;
                    write_canonical(os, j[i], indent + 1);
                }
                os << "\n" << pad << "]";
            }
            return;
        }
        case Json::value_t::number_float:
            os << format_real(j.get<double>());
            return;
        default:
            os << j.dump();
    }
}

inline Json point_json(const SpherePoint& p) { return Json::array({p.x(), p.y(), p.z()}); }

inline SpherePoint point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number()) {
        throw Error(ErrorCode::ParseError, "a point must be an array of three numbers");
    }
    try {
        return SpherePoint::from_unit({j[0].get<double>(), j[1].get<double>(), j[2].get<double>()});
    } catch (const Error&) {
        throw Error(ErrorCode::ParseError, "a point must be a nonzero vector");
    }
}

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

inline std::vector<std::size_t> index_list(const Json& j, std::size_t n) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "segment indices must be an array");
    std::vector<std::size_t> out;
    for (const Json& e : j) {
        if (!e.is_number_unsigned() || e.get<std::size_t>() >= n) {
            throw Error(ErrorCode::ParseError, "segment index out of range");
        }
        out.push_back(e.get<std::size_t>());
    }
    return out;
}

}  // namespace detail

/// Canonical text form of any JSON value (trailing newline included).
inline std::string canonical_dump(const Json& j) {
    std::ostringstream os;
    detail::write_canonical(os, j, 0);
    os << "\n";
    return os.str();
}

inline Json segment_to_json(const Segment& s) {
    if (s.is_geodesic()) {
        return {{"kind", "geodesic"}, {"a", detail::point_json(s.start())}, {"b", detail::point_json(s.end())}};
    }
    return {{"kind", "circle_arc"},
            {"center", detail::point_json(s.center())},
            {"radius", s.radius()},
            {"from", detail::point_json(s.start())},
            {"to", detail::point_json(s.end())},
            {"ccw", s.ccw()}};
}

inline Segment segment_from_json(const Json& j) {
    const std::string kind = detail::field(j, "kind").get<std::string>();
    if (kind == "geodesic") {
        return Segment::geodesic(detail::point_from_json(detail::field(j, "a")),
                                 detail::point_from_json(detail::field(j, "b")));
    }
    if (kind == "circle_arc") {
        const Json& r = detail::field(j, "radius");
        if (!r.is_number()) throw Error(ErrorCode::ParseError, "radius must be a number");
        const bool ccw = j.contains("ccw") ? j.at("ccw").get<bool>() : true;
        return Segment::circle_arc(detail::point_from_json(detail::field(j, "center")), r.get<double>(),
                                   detail::point_from_json(detail::field(j, "from")),
                                   detail::point_from_json(detail::field(j, "to")), ccw);
    }
    throw Error(ErrorCode::ParseError, "unknown segment kind '" + kind + "'");
}

inline Json decomposition_to_json(const Decomposition& dec) {
    Json features = Json::array();
    for (const Feature& f : dec.features) {
        if (const auto* arm = std::get_if<ArmFeature>(&f)) {
            features.push_back({{"kind", "arm"}, {"segments", arm->segments}});
            continue;
        }
        const CwPair& p = std::get<CwPair>(f);
        Json jp = {{"kind", "cw_pair"},
                   {"f_segments", p.f_segments},
                   {"g_segments", p.g_segments},
                   {"f_lead_fan", p.f_lead_fan},
                   {"f_trail_fan", p.f_trail_fan}};
        if (p.f_vertex) jp["f_vertex"] = *p.f_vertex;
        if (p.g_vertex) jp["g_vertex"] = *p.g_vertex;
        features.push_back(std::move(jp));
    }
    return {{"features", features}};
}

inline Decomposition decomposition_from_json(const Json& j, std::size_t n_segments) {
    Decomposition dec;
    const Json& features = detail::field(j, "features");
    if (!features.is_array()) throw Error(ErrorCode::ParseError, "features must be an array");
    for (const Json& f : features) {
        const std::string kind = detail::field(f, "kind").get<std::string>();
        if (kind == "arm") {
            dec.features.emplace_back(ArmFeature{detail::index_list(detail::field(f, "segments"), n_segments)});
        } else if (kind == "cw_pair") {
            CwPair p;
            p.f_segments = detail::index_list(detail::field(f, "f_segments"), n_segments);
            p.g_segments = detail::index_list(detail::field(f, "g_segments"), n_segments);
            if (f.contains("f_vertex")) p.f_vertex = detail::index_list(Json::array({f.at("f_vertex")}), n_segments)[0];
            if (f.contains("g_vertex")) p.g_vertex = detail::index_list(Json::array({f.at("g_vertex")}), n_segments)[0];
            p.f_lead_fan = f.value("f_lead_fan", false);
            p.f_trail_fan = f.value("f_trail_fan", false);
            if ((p.f_segments.empty() != p.f_vertex.has_value()) || (p.g_segments.empty() != p.g_vertex.has_value())) {
                throw Error(ErrorCode::ParseError, "each curve of a pair is either segments or one vertex");
            }
            dec.features.emplace_back(std::move(p));
        } else {
            throw Error(ErrorCode::ParseError, "unknown feature kind '" + kind + "'");
        }
    }
    return dec;
}

inline Json body_file_to_json(const BodyFile& f) {
    Json segs = Json::array();
    for (const Segment& s : f.body.segments()) segs.push_back(segment_to_json(s));
    Json j = {{"format", body_format_tag}, {"segments", segs}};
    if (f.decomposition) j["decomposition"] = decomposition_to_json(*f.decomposition);
    Json meta = Json::object();
    if (f.metadata.thickness) meta["thickness"] = *f.metadata.thickness;
    if (!f.metadata.generator.empty()) meta["generator"] = f.metadata.generator;
    if (!f.metadata.parameters.empty()) meta["parameters"] = f.metadata.parameters;
    if (!meta.empty()) j["metadata"] = meta;
    return j;
}

/// Parses a body file. Closure is always checked; convexity only when asked.
inline BodyFile body_file_from_json(const Json& j, bool require_convex = true) {
    if (!j.is_object() || j.value("format", std::string()) != body_format_tag) {
        throw Error(ErrorCode::ParseError, std::string("not a ") + body_format_tag + " body file");
    }
    const Json& js = detail::field(j, "segments");
    if (!js.is_array()) throw Error(ErrorCode::ParseError, "segments must be an array");
    std::vector<Segment> segs;
    for (const Json& s : js) segs.push_back(segment_from_json(s));
    ConvexBody body(std::move(segs));
    if (require_convex) {
        if (auto r = is_convex(body); !r) throw Error(ErrorCode::InvalidBody, r.violation);
    }
    BodyFile f{std::move(body), std::nullopt, {}};
    if (j.contains("decomposition")) f.decomposition = decomposition_from_json(j.at("decomposition"), f.body.size());
    if (j.contains("metadata")) {
        const Json& m = j.at("metadata");
        if (m.contains("thickness")) f.metadata.thickness = m.at("thickness").get<double>();
        f.metadata.generator = m.value("generator", std::string());
        if (m.contains("parameters")) f.metadata.parameters = m.at("parameters");
    }
    return f;
}

inline std::string save_body(const BodyFile& f) { return canonical_dump(body_file_to_json(f)); }

inline BodyFile load_body(const std::string& text, bool require_convex = true) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    try {
        return body_file_from_json(j, require_convex);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
    out << text;
}

inline BodyFile load_body_file(const std::string& path, bool require_convex = true) {
    return load_body(read_text_file(path), require_convex);
}

inline Json net_to_json(const ChordNet& net) {
    Json chords = Json::array();
    for (const Chord& c : net.chords) chords.push_back({{"f", detail::point_json(c.f)}, {"g", detail::point_json(c.g)}});
    auto points = [](const std::vector<SpherePoint>& ps) {
        Json a = Json::array();
        for (const SpherePoint& p : ps) a.push_back(detail::point_json(p));
        return a;
    };
    return {{"delta", net.delta}, {"chords", chords}, {"o", points(net.o)}, {"c", points(net.c)},
            {"k", points(net.k)},  {"l", points(net.l)}};
}

inline Json report_to_json(const ApproxReport& r, const std::vector<ChordNet>& nets, bool trivial) {
    Json j = {{"eps", r.eps},
              {"delta_in", r.delta_in},
              {"delta_out", r.delta_out},
              {"certified_bound", r.certified_bound},
              {"measured_hausdorff", r.measured_hausdorff},
              {"n_chords", r.n_chords},
              {"certificate_holds", r.certificate_holds},
              {"certificate_failures", r.certificate_failures},
              {"trivial", trivial}};
    j["constant_width_dev"] = r.constant_width_dev ? Json(*r.constant_width_dev) : Json(nullptr);
    Json jn = Json::array();
    for (const ChordNet& n : nets) jn.push_back(net_to_json(n));
    j["nets"] = jn;
    return j;
}

}  // namespace sconvex
