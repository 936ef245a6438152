#pragma once

// Operator spec documents, report serialization, flat tables and SVG plots.
//
// Spec document (JSON):
//   { "period": 2, "band": 2,
//     "diagonals": { "1": [-1, 2], "2": [1, [1, 0]] } }
// Complex entries are [re, im] pairs or bare reals. Missing offsets are zero.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ptoeplitz/counterexample.hpp"
#include "ptoeplitz/error.hpp"
#include "ptoeplitz/forms.hpp"
#include "ptoeplitz/geometry.hpp"
#include "ptoeplitz/numerical_range.hpp"
#include "ptoeplitz/operator.hpp"

namespace ptoeplitz::io {

using nlohmann::json;

/// 17 significant digits; round-trips every double.
inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline Complex parse_complex(const json& j, const std::string& where) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    fail(ErrorKind::kParse, where + ": expected a number or [re, im]");
}

inline json complex_to_json(Complex z) {
    if (z.imag() == 0.0) return z.real();
    return json::array({z.real(), z.imag()});
}

inline RawSpec parse_spec(const json& doc) {
    if (!doc.is_object()) fail(ErrorKind::kParse, "spec document must be an object");
    auto integer = [&](const char* key) -> long long {
        if (!doc.contains(key) || !doc[key].is_number_integer())
            fail(ErrorKind::kParse, std::string("spec field '") + key + "' must be an integer");
        return doc[key].get<long long>();
    };
    RawSpec raw;
    raw.period = integer("period");
    raw.band = integer("band");
    if (doc.contains("zero")) {
        if (!doc["zero"].is_boolean()) fail(ErrorKind::kParse, "spec field 'zero' must be a boolean");
        raw.zero_operator = doc["zero"].get<bool>();
    }
    if (!doc.contains("diagonals")) return raw;
    const json& diags = doc["diagonals"];
    if (!diags.is_object()) fail(ErrorKind::kParse, "spec field 'diagonals' must be an object");
    for (const auto& [key, values] : diags.items()) {
        long long offset = 0;
        std::size_t used = 0;
        try {
            offset = std::stoll(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || key.empty()) fail(ErrorKind::kParse, "diagonal key '" + key + "' is not an integer");
        if (!values.is_array()) fail(ErrorKind::kParse, "diagonal '" + key + "' must be an array");
        std::vector<Complex> v;
        for (std::size_t i = 0; i < values.size(); ++i)
            v.push_back(parse_complex(values[i], "diagonal '" + key + "' entry " + std::to_string(i)));
        raw.diagonals[offset] = std::move(v);
    }
    return raw;
}

inline RawSpec parse_spec_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::kParse, std::string("spec is not valid JSON: ") + e.what());
    }
    return parse_spec(doc);
}

inline std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::kParse, "cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline RawSpec read_spec_file(const std::filesystem::path& path) { return parse_spec_text(read_text(path)); }

inline json spec_to_json(const PeriodicBandedSpec& spec) {
    json diags = json::object();
    const auto m = static_cast<long long>(spec.band());
    for (long long r = -m; r <= m; ++r) {
        json arr = json::array();
        for (Complex z : spec.diagonal(r)) arr.push_back(complex_to_json(z));
        diags[std::to_string(r)] = arr;
    }
    json doc = {{"period", spec.period()}, {"band", spec.band()}, {"diagonals", diags}};
    if (spec.is_zero()) doc["zero"] = true;
    return doc;
}

/// Writes via a sibling temporary file and rename, so readers never see a partial file.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(ErrorKind::kIo, "cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) fail(ErrorKind::kIo, "write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        fail(ErrorKind::kIo, "cannot move output into '" + path.string() + "'");
    }
}

// ---------------------------------------------------------------------------
// Range reports
// ---------------------------------------------------------------------------

inline json polygon_to_json(const ConvexPolygon& poly) {
    json arr = json::array();
    for (const Point& p : poly.vertices) arr.push_back(json::array({p.x, p.y}));
    return arr;
}

inline ConvexPolygon polygon_from_json(const json& arr) {
    ConvexPolygon poly;
    for (const auto& p : arr) poly.vertices.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    return poly;
}

inline json report_to_json(const RangeReport& report, bool include_samples = true) {
    json doc = {{"theta_count", report.theta_count},
                {"phi_count", report.phi_count},
                {"polygon", polygon_to_json(report.polygon)},
                {"residual_summary", report.residual_summary}};
    if (include_samples) {
        json samples = json::array();
        for (const auto& s : report.samples)
            samples.push_back(json::array({s.theta, s.phi, s.support_value, s.boundary_point.x, s.boundary_point.y}));
        doc["samples"] = std::move(samples);
    }
    return doc;
}

inline RangeReport report_from_json(const json& doc) {
    try {
        RangeReport r;
        r.theta_count = doc.at("theta_count").get<std::size_t>();
        r.phi_count = doc.at("phi_count").get<std::size_t>();
        r.polygon = polygon_from_json(doc.at("polygon"));
        r.residual_summary = doc.at("residual_summary").get<std::map<std::string, double>>();
        if (doc.contains("samples"))
            for (const auto& s : doc["samples"])
                r.samples.push_back({s.at(0).get<double>(), s.at(1).get<double>(), s.at(2).get<double>(),
                                     {s.at(3).get<double>(), s.at(4).get<double>()}});
        return r;
    } catch (const json::exception& e) {
        fail(ErrorKind::kParse, std::string("malformed range report: ") + e.what());
    }
}

/// Header line, then one sample per line: theta phi support_value x y.
inline std::string flat_table(const RangeReport& report) {
    std::string out = "theta\tphi\tsupport_value\tx\ty\n";
    for (const auto& s : report.samples) {
        out += format_real(s.theta) + '\t' + format_real(s.phi) + '\t' + format_real(s.support_value) + '\t' +
               format_real(s.boundary_point.x) + '\t' + format_real(s.boundary_point.y) + '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Forms and the non-representability report
// ---------------------------------------------------------------------------

inline json form_to_json(const TernaryForm& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.coefficients()) terms.push_back(json::array({e[0], e[1], e[2], c}));
    return {{"degree", f.degree()}, {"terms", terms}};
}

inline TernaryForm form_from_json(const json& doc) {
    try {
        std::map<Exponent, double> coeffs;
        for (const auto& t : doc.at("terms"))
            coeffs[{t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()}] = t.at(3).get<double>();
        return TernaryForm(doc.at("degree").get<int>(), coeffs);
    } catch (const json::exception& e) {
        fail(ErrorKind::kParse, std::string("malformed form: ") + e.what());
    }
}

inline json complex_list_to_json(const std::vector<Complex>& zs) {
    json arr = json::array();
    for (Complex z : zs) arr.push_back(json::array({z.real(), z.imag()}));
    return arr;
}

inline json verdict_to_json(const HyperbolicityVerdict& v) {
    json doc = {{"hyperbolic", v.hyperbolic},
                {"max_imag", v.max_imag},
                {"direction_count", v.direction_count},
                {"tol", v.tol}};
    if (v.witness_angle) doc["witness_angle"] = *v.witness_angle;
    if (v.witness_direction) doc["witness_direction"] = {v.witness_direction->x, v.witness_direction->y};
    if (v.witness_roots) doc["witness_roots"] = complex_list_to_json(*v.witness_roots);
    return doc;
}

inline HyperbolicityVerdict verdict_from_json(const json& doc) {
    HyperbolicityVerdict v;
    v.hyperbolic = doc.at("hyperbolic").get<bool>();
    v.max_imag = doc.at("max_imag").get<double>();
    v.direction_count = doc.at("direction_count").get<std::size_t>();
    v.tol = doc.at("tol").get<double>();
    if (doc.contains("witness_angle")) v.witness_angle = doc["witness_angle"].get<double>();
    if (doc.contains("witness_direction"))
        v.witness_direction = Point{doc["witness_direction"].at(0).get<double>(), doc["witness_direction"].at(1).get<double>()};
    if (doc.contains("witness_roots")) {
        std::vector<Complex> roots;
        for (const auto& z : doc["witness_roots"]) roots.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
        v.witness_roots = std::move(roots);
    }
    return v;
}

inline json nonrepresentability_to_json(const NonrepresentabilityReport& r) {
    json samples = json::array();
    for (const auto& s : r.duality_samples) samples.push_back(json::array({s.x, s.y, s.residual}));
    return {{"quartic", form_to_json(r.quartic)},
            {"dual", form_to_json(r.dual)},
            {"envelope_ratio", {r.envelope_ratio_num, r.envelope_ratio_den}},
            {"duality_samples", samples},
            {"max_duality_residual", r.max_duality_residual},
            {"verdict", verdict_to_json(r.verdict)},
            {"witness_restriction", r.witness_restriction},
            {"witness_real_roots", r.witness_real_roots},
            {"representable_by_matrix", r.representable_by_matrix},
            {"conclusion", r.conclusion}};
}

inline NonrepresentabilityReport nonrepresentability_from_json(const json& doc) {
    try {
        NonrepresentabilityReport r;
        r.quartic = form_from_json(doc.at("quartic"));
        r.dual = form_from_json(doc.at("dual"));
        r.envelope_ratio_num = doc.at("envelope_ratio").at(0).get<long long>();
        r.envelope_ratio_den = doc.at("envelope_ratio").at(1).get<long long>();
        for (const auto& s : doc.at("duality_samples"))
            r.duality_samples.push_back({s.at(0).get<double>(), s.at(1).get<double>(), s.at(2).get<double>()});
        r.max_duality_residual = doc.at("max_duality_residual").get<double>();
        r.verdict = verdict_from_json(doc.at("verdict"));
        r.witness_restriction = doc.at("witness_restriction").get<std::vector<double>>();
        r.witness_real_roots = doc.at("witness_real_roots").get<std::vector<double>>();
        r.representable_by_matrix = doc.at("representable_by_matrix").get<bool>();
        r.conclusion = doc.at("conclusion").get<std::string>();
        return r;
    } catch (const json::exception& e) {
        fail(ErrorKind::kParse, std::string("malformed non-representability report: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// SVG
// ---------------------------------------------------------------------------

struct SvgLayer {
    std::vector<Point> points;
    bool closed = true;
    std::string stroke = "black";
    double stroke_width = 1.5;
    bool dotted = false;
};

/// Plots layers in data coordinates (y up) with a 5% margin around their bounding box.
inline std::string render_svg(const std::vector<SvgLayer>& layers, double width = 640.0, double height = 640.0) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const auto& layer : layers)
        for (const Point& p : layer.points) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    if (!(xmin <= xmax)) xmin = xmax = ymin = ymax = 0.0;
    double spanx = xmax - xmin, spany = ymax - ymin;
    const double extent = std::max({spanx, spany, 1e-6});
    if (spanx < 1e-6) spanx = extent;
    if (spany < 1e-6) spany = extent;
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    const double vw = spanx * 1.1, vh = spany * 1.1;
    const double vx = cx - vw / 2.0, vy = -cy - vh / 2.0;
    const double unit = std::max(vw, vh) / std::max(width, height);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_real(width) + "\" height=\"" +
           format_real(height) + "\" viewBox=\"" + format_real(vx) + ' ' + format_real(vy) + ' ' + format_real(vw) +
           ' ' + format_real(vh) + "\">\n";
    // axes
    out += "<g stroke=\"#bbbbbb\" stroke-width=\"" + format_real(0.75 * unit) + "\">\n";
    if (vy <= 0.0 && 0.0 <= vy + vh)
        out += "<line x1=\"" + format_real(vx) + "\" y1=\"0\" x2=\"" + format_real(vx + vw) + "\" y2=\"0\"/>\n";
    if (vx <= 0.0 && 0.0 <= vx + vw)
        out += "<line x1=\"0\" y1=\"" + format_real(vy) + "\" x2=\"0\" y2=\"" + format_real(vy + vh) + "\"/>\n";
    out += "</g>\n";
    for (const auto& layer : layers) {
        if (layer.points.empty()) continue;
        if (layer.points.size() == 1) {
            out += "<circle cx=\"" + format_real(layer.points[0].x) + "\" cy=\"" + format_real(-layer.points[0].y) +
                   "\" r=\"" + format_real(3.0 * unit) + "\" fill=\"" + layer.stroke + "\"/>\n";
            continue;
        }
        out += std::string("<") + (layer.closed ? "polygon" : "polyline") + " fill=\"none\" stroke=\"" + layer.stroke +
               "\" stroke-width=\"" + format_real(layer.stroke_width * unit) + "\"";
        if (layer.dotted) out += " stroke-dasharray=\"" + format_real(2.0 * unit) + ' ' + format_real(3.0 * unit) + "\"";
        out += " points=\"";
        for (std::size_t i = 0; i < layer.points.size(); ++i) {
            if (i) out += ' ';
            out += format_real(layer.points[i].x) + ',' + format_real(-layer.points[i].y);
        }
        out += "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace ptoeplitz::io
