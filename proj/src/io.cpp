#include "oriex/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace oriex {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string format_number(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

double angle_in(const json& j, const std::string& field, bool degrees) {
    if (!j.contains(field)) throw ParseError("spec: missing field '" + field + "'");
    if (!j[field].is_number()) throw ParseError("spec: field '" + field + "' must be a number");
    double v = j[field].get<double>();
    return degrees ? deg2rad(v) : v;
}

}  // namespace

SpecDocument parse_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("spec: invalid JSON: ") + e.what());
    }
    SpecDocument doc;
    if (!j.contains("version") || j["version"].get<int>() != 1)
        throw ParseError("spec: expected version 1");
    bool degrees = true;
    if (j.contains("units")) {
        std::string u = j["units"].get<std::string>();
        if (u == "radians")
            degrees = false;
        else if (u != "degrees")
            throw ParseError("spec: units must be 'degrees' or 'radians'");
    }
    if (!j.contains("base") || !j["base"].is_array() || j["base"].size() < 3)
        throw ParseError("spec: 'base' must list at least 3 [x,y] vertices");
    for (const auto& v : j["base"]) {
        if (!v.is_array() || v.size() != 2) throw ParseError("spec: base vertex must be [x,y]");
        doc.poly.base.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    int n = static_cast<int>(doc.poly.base.size());
    auto one_angles = [&](const json& a) {
        PolyhedronSpec::VertexAngles va;
        va.beta_l = angle_in(a, "beta_l", degrees);
        va.beta_r = angle_in(a, "beta_r", degrees);
        va.delta_l = a.contains("delta_l") ? angle_in(a, "delta_l", degrees) : 0.0;
        va.delta_r = a.contains("delta_r") ? angle_in(a, "delta_r", degrees) : 0.0;
        return va;
    };
    if (!j.contains("vertices")) throw ParseError("spec: missing 'vertices'");
    if (j["vertices"].is_object()) {
        doc.poly.angles.assign(n, one_angles(j["vertices"]));
    } else if (j["vertices"].is_array()) {
        if (static_cast<int>(j["vertices"].size()) != n)
            throw ParseError("spec: 'vertices' must match the base vertex count");
        for (const auto& a : j["vertices"]) doc.poly.angles.push_back(one_angles(a));
    } else {
        throw ParseError("spec: 'vertices' must be an object or array");
    }
    if (j.contains("height")) {
        if (j["height"].is_string()) {
            if (j["height"].get<std::string>() != "max")
                throw ParseError("spec: height must be a number or \"max\"");
            doc.height_max = true;
            doc.poly.height = 0.0;
        } else {
            doc.poly.height = j["height"].get<double>();
            if (doc.poly.height < 0) throw ParseError("spec: height must be >= 0");
            if (doc.poly.height == 0) doc.height_max = true;
        }
    } else {
        doc.height_max = true;
    }
    if (j.contains("family")) {
        std::string f = j["family"].get<std::string>();
        if (f == "conv")
            doc.layout.family = Family::Conventional;
        else if (f == "new")
            doc.layout.family = Family::New;
        else if (f == "auto")
            doc.layout.family = Family::Auto;
        else
            throw ParseError("spec: family must be conv|new|auto");
    }
    if (j.contains("divide")) {
        if (!j["divide"].is_array()) throw ParseError("spec: 'divide' must be a ratio array");
        std::vector<double> r;
        for (const auto& v : j["divide"]) r.push_back(v.get<double>());
        doc.layout.plan = DivisionPlan::of(r);
    }
    if (j.contains("insert_widths")) {
        if (!j["insert_widths"].is_array() ||
            static_cast<int>(j["insert_widths"].size()) != n)
            throw ParseError("spec: 'insert_widths' must list one width per vertex");
        for (const auto& v : j["insert_widths"]) doc.insert_widths.push_back(v.get<double>());
    }
    if (j.contains("variant_b")) doc.layout.variant_b = j["variant_b"].get<bool>();
    if (j.contains("tolerance")) {
        doc.has_tol = true;
        if (j["tolerance"].contains("eps_len"))
            doc.tol.eps_len = j["tolerance"]["eps_len"].get<double>();
        if (j["tolerance"].contains("eps_ang"))
            doc.tol.eps_ang = j["tolerance"]["eps_ang"].get<double>();
        if (doc.tol.eps_len <= 0 || doc.tol.eps_ang <= 0)
            throw ParseError("spec: tolerances must be positive");
    }
    auto viol = validate_polyhedron(doc.poly, doc.tol);
    if (!viol.empty()) throw ParseError("spec: " + viol[0]);
    return doc;
}

std::string emit_spec(const SpecDocument& doc) {
    ordered_json j;
    j["version"] = 1;
    j["units"] = "degrees";
    j["base"] = json::array();
    for (const auto& p : doc.poly.base) j["base"].push_back({p.x, p.y});
    j["vertices"] = json::array();
    for (const auto& a : doc.poly.angles) {
        ordered_json v;
        v["beta_l"] = rad2deg(a.beta_l);
        v["beta_r"] = rad2deg(a.beta_r);
        v["delta_l"] = rad2deg(a.delta_l);
        v["delta_r"] = rad2deg(a.delta_r);
        j["vertices"].push_back(v);
    }
    if (doc.height_max)
        j["height"] = "max";
    else
        j["height"] = doc.poly.height;
    j["family"] = doc.layout.family == Family::Conventional
                      ? "conv"
                      : (doc.layout.family == Family::New ? "new" : "auto");
    if (doc.layout.plan) j["divide"] = doc.layout.plan->ratios;
    if (!doc.insert_widths.empty()) j["insert_widths"] = doc.insert_widths;
    return j.dump(2) + "\n";
}

namespace {

struct ClippedCP {
    std::vector<Point2> vertices;
    std::vector<VertexClass> cls;
    std::vector<std::array<int, 2>> edges;
    std::vector<Fold> folds;
};

// Clips ray creases to the sheet rectangle (or an enlarged bounding box).
ClippedCP clip_to_sheet(const CreasePattern& cp) {
    Rect sheet;
    if (cp.sheet) {
        sheet = *cp.sheet;
    } else {
        sheet = cp.bounds();
        double m = 0.25 * std::max(sheet.hi.x - sheet.lo.x, sheet.hi.y - sheet.lo.y) + 1.0;
        sheet = Rect{{sheet.lo.x - m, sheet.lo.y - m}, {sheet.hi.x + m, sheet.hi.y + m}};
    }
    ClippedCP out;
    for (size_t i = 0; i < cp.vertices.size(); ++i) {
        out.vertices.push_back(cp.vertices[i]);
        out.cls.push_back(cp.vinfo[i].cls);
    }
    for (const auto& c : cp.creases) {
        int a = c.a, b = c.b;
        if (c.is_ray()) {
            Point2 o = cp.vertices[c.a];
            double tmax = std::numeric_limits<double>::infinity();
            auto clip = [&](double lo, double hi, double x0, double d) {
                if (std::fabs(d) < 1e-15) return;
                double t1 = (lo - x0) / d, t2 = (hi - x0) / d;
                tmax = std::min(tmax, std::max(t1, t2));
            };
            clip(sheet.lo.x, sheet.hi.x, o.x, c.dir.x);
            clip(sheet.lo.y, sheet.hi.y, o.y, c.dir.y);
            if (!std::isfinite(tmax) || tmax <= 0) continue;
            out.vertices.push_back(o + tmax * c.dir);
            out.cls.push_back(VertexClass::SheetBoundary);
            b = static_cast<int>(out.vertices.size() - 1);
        }
        out.edges.push_back({a, b});
        out.folds.push_back(c.fold);
    }
    return out;
}

const char* cls_name(VertexClass c) {
    switch (c) {
        case VertexClass::Interior: return "interior";
        case VertexClass::FoldedBoundary: return "folded-boundary";
        case VertexClass::SheetBoundary: return "sheet-boundary";
    }
    return "sheet-boundary";
}

}  // namespace

std::string emit_fold(const CreasePattern& cp, const Tolerance&) {
    ClippedCP cc = clip_to_sheet(cp);

    // Canonical edge order.
    std::vector<size_t> order(cc.edges.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto key = [&](size_t i) {
        int a = cc.edges[i][0], b = cc.edges[i][1];
        return std::make_pair(std::min(a, b), std::max(a, b));
    };
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return key(i) < key(j); });

    std::ostringstream os;
    os << "{\n";
    os << "  \"file_spec\": 1.1,\n";
    os << "  \"file_creator\": \"oriex\",\n";
    os << "  \"file_classes\": [\"singleModel\"],\n";
    os << "  \"frame_classes\": [\"creasePattern\"],\n";
    os << "  \"vertices_coords\": [";
    for (size_t i = 0; i < cc.vertices.size(); ++i) {
        os << (i ? "," : "") << "[" << format_number(cc.vertices[i].x) << ","
           << format_number(cc.vertices[i].y) << "]";
    }
    os << "],\n";
    os << "  \"edges_vertices\": [";
    for (size_t k = 0; k < order.size(); ++k) {
        auto [a, b] = key(order[k]);
        os << (k ? "," : "") << "[" << a << "," << b << "]";
    }
    os << "],\n";
    os << "  \"edges_assignment\": [";
    for (size_t k = 0; k < order.size(); ++k)
        os << (k ? "," : "") << "\"" << fold_letter(cc.folds[order[k]]) << "\"";
    os << "],\n";
    os << "  \"edges_foldAngle\": [";
    for (size_t k = 0; k < order.size(); ++k) {
        Fold f = cc.folds[order[k]];
        os << (k ? "," : "")
           << (f == Fold::Mountain ? "-180" : (f == Fold::Valley ? "180" : "0"));
    }
    os << "],\n";
    os << "  \"oriex:vertices_class\": [";
    for (size_t i = 0; i < cc.cls.size(); ++i)
        os << (i ? "," : "") << "\"" << cls_name(cc.cls[i]) << "\"";
    os << "]\n";
    os << "}\n";
    return os.str();
}

CreasePattern parse_fold(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("fold: invalid JSON: ") + e.what());
    }
    if (!j.contains("vertices_coords") || !j.contains("edges_vertices"))
        throw ParseError("fold: missing vertices_coords or edges_vertices");
    CreasePattern cp;
    for (const auto& v : j["vertices_coords"]) {
        if (!v.is_array() || v.size() < 2) throw ParseError("fold: bad vertex");
        cp.add_vertex({v[0].get<double>(), v[1].get<double>()});
    }
    std::vector<std::string> cls;
    if (j.contains("oriex:vertices_class"))
        for (const auto& c : j["oriex:vertices_class"]) cls.push_back(c.get<std::string>());
    if (!cls.empty() && cls.size() != cp.vertices.size())
        throw ParseError("fold: oriex:vertices_class length mismatch");
    for (size_t i = 0; i < cls.size(); ++i) {
        if (cls[i] == "interior")
            cp.vinfo[i].cls = VertexClass::Interior;
        else if (cls[i] == "folded-boundary")
            cp.vinfo[i].cls = VertexClass::FoldedBoundary;
        else
            cp.vinfo[i].cls = VertexClass::SheetBoundary;
    }
    if (cls.empty())
        for (auto& vi : cp.vinfo) vi.cls = VertexClass::SheetBoundary;
    const auto& ev = j["edges_vertices"];
    std::vector<std::string> ea;
    if (j.contains("edges_assignment"))
        for (const auto& a : j["edges_assignment"]) ea.push_back(a.get<std::string>());
    if (!ea.empty() && ea.size() != ev.size())
        throw ParseError("fold: edges_assignment length mismatch");
    for (size_t k = 0; k < ev.size(); ++k) {
        int a = ev[k][0].get<int>(), b = ev[k][1].get<int>();
        if (a < 0 || b < 0 || a >= static_cast<int>(cp.vertices.size()) ||
            b >= static_cast<int>(cp.vertices.size()))
            throw ParseError("fold: edge index out of range");
        Fold f = Fold::Flat;
        if (!ea.empty()) {
            const std::string& s = ea[k];
            f = s == "M" ? Fold::Mountain
                         : (s == "V" ? Fold::Valley : (s == "B" ? Fold::Boundary : Fold::Flat));
        }
        cp.add_segment(a, b, f, "e" + std::to_string(k));
    }
    return cp;
}

std::vector<std::string> validate_fold_text(const std::string& text) {
    std::vector<std::string> out;
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        out.push_back(std::string("invalid JSON: ") + e.what());
        return out;
    }
    if (!j.is_object()) {
        out.push_back("top level must be an object");
        return out;
    }
    if (j.contains("file_spec") && !j["file_spec"].is_number())
        out.push_back("file_spec must be a number");
    if (!j.contains("vertices_coords"))
        out.push_back("missing vertices_coords");
    else if (!j["vertices_coords"].is_array())
        out.push_back("vertices_coords must be an array");
    size_t nv = j.contains("vertices_coords") && j["vertices_coords"].is_array()
                    ? j["vertices_coords"].size()
                    : 0;
    if (j.contains("vertices_coords") && j["vertices_coords"].is_array())
        for (const auto& v : j["vertices_coords"])
            if (!v.is_array() || v.size() < 2 || !v[0].is_number() || !v[1].is_number()) {
                out.push_back("vertices_coords entries must be numeric [x,y]");
                break;
            }
    if (!j.contains("edges_vertices"))
        out.push_back("missing edges_vertices");
    else if (!j["edges_vertices"].is_array())
        out.push_back("edges_vertices must be an array");
    size_t ne = j.contains("edges_vertices") && j["edges_vertices"].is_array()
                    ? j["edges_vertices"].size()
                    : 0;
    if (j.contains("edges_vertices") && j["edges_vertices"].is_array())
        for (const auto& e : j["edges_vertices"])
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer() || e[0].get<int>() < 0 ||
                e[1].get<int>() < 0 || e[0].get<size_t>() >= nv || e[1].get<size_t>() >= nv) {
                out.push_back("edges_vertices entries must index vertices");
                break;
            }
    if (j.contains("edges_assignment")) {
        if (!j["edges_assignment"].is_array() || j["edges_assignment"].size() != ne)
            out.push_back("edges_assignment must match edge count");
        else
            for (const auto& a : j["edges_assignment"]) {
                std::string s = a.is_string() ? a.get<std::string>() : "";
                if (s != "M" && s != "V" && s != "B" && s != "F" && s != "U") {
                    out.push_back("edges_assignment entries must be M|V|B|F|U");
                    break;
                }
            }
    }
    if (j.contains("edges_foldAngle") &&
        (!j["edges_foldAngle"].is_array() || j["edges_foldAngle"].size() != ne))
        out.push_back("edges_foldAngle must match edge count");
    return out;
}

std::string emit_svg(const CreasePattern& cp, const SvgStyle& style, const Tolerance&) {
    ClippedCP cc = clip_to_sheet(cp);
    Rect sheet = cp.sheet ? *cp.sheet : cp.bounds();
    double w = sheet.hi.x - sheet.lo.x;
    double h = sheet.hi.y - sheet.lo.y;
    double sw = style.stroke_width > 0 ? style.stroke_width : 0.004 * std::max(w, h);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_number(sheet.lo.x)
       << " " << format_number(-sheet.hi.y) << " " << format_number(w) << " "
       << format_number(h) << "\">\n";
    os << "<g transform=\"scale(1,-1)\" stroke-linecap=\"round\" fill=\"none\">\n";
    os << "<rect x=\"" << format_number(sheet.lo.x) << "\" y=\"" << format_number(sheet.lo.y)
       << "\" width=\"" << format_number(w) << "\" height=\"" << format_number(h)
       << "\" stroke=\"" << style.boundary << "\" stroke-width=\"" << format_number(sw)
       << "\"/>\n";
    auto draw = [&](Fold f) {
        for (size_t k = 0; k < cc.edges.size(); ++k) {
            if (cc.folds[k] != f) continue;
            Point2 a = cc.vertices[cc.edges[k][0]];
            Point2 b = cc.vertices[cc.edges[k][1]];
            os << "<line x1=\"" << format_number(a.x) << "\" y1=\"" << format_number(a.y)
               << "\" x2=\"" << format_number(b.x) << "\" y2=\"" << format_number(b.y)
               << "\"/>\n";
        }
    };
    os << "<g stroke=\"" << style.mountain << "\" stroke-width=\"" << format_number(sw)
       << "\">\n";
    draw(Fold::Mountain);
    os << "</g>\n";
    os << "<g stroke=\"" << style.valley << "\" stroke-width=\"" << format_number(sw) << "\"";
    if (style.dash_valley)
        os << " stroke-dasharray=\"" << format_number(4 * sw) << " " << format_number(3 * sw)
           << "\"";
    os << ">\n";
    draw(Fold::Valley);
    os << "</g>\n";
    os << "<g stroke=\"" << style.boundary << "\" stroke-width=\"" << format_number(sw)
       << "\">\n";
    draw(Fold::Boundary);
    draw(Fold::Flat);
    os << "</g>\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace oriex
