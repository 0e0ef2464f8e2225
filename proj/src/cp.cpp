#include "oriex/cp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace oriex {

int CreasePattern::add_vertex(Point2 p, VertexInfo info, double merge_eps) {
    if (merge_eps > 0.0) {
        for (size_t i = 0; i < vertices.size(); ++i)
            if (dist(vertices[i], p) <= merge_eps) return static_cast<int>(i);
    }
    vertices.push_back(p);
    vinfo.push_back(info);
    return static_cast<int>(vertices.size() - 1);
}

void CreasePattern::add_segment(int a, int b, Fold f, std::string label) {
    if (a == b) throw ConstructionError("degenerate crease: " + label);
    creases.push_back(Crease{a, b, {0, 0}, f, std::move(label)});
}

void CreasePattern::add_ray(int a, Vec2 dir, Fold f, std::string label) {
    creases.push_back(Crease{a, -1, normalized(dir), f, std::move(label)});
}

void CreasePattern::add_chain(const std::vector<int>& vs, Fold f, const std::string& label) {
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
        std::ostringstream os;
        os << label;
        if (vs.size() > 2) os << "." << i;
        add_segment(vs[i], vs[i + 1], f, os.str());
    }
}

void CreasePattern::transform(const Pose& pose) {
    for (auto& v : vertices) v = pose.apply(v);
    for (auto& c : creases)
        if (c.is_ray()) c.dir = pose.apply_dir(c.dir);
    for (auto& info : vinfo) {
        if (info.delim_a) info.delim_a = pose.apply_dir(*info.delim_a);
        if (info.delim_b) info.delim_b = pose.apply_dir(*info.delim_b);
        if (info.pos_ref) info.pos_ref = pose.apply_dir(*info.pos_ref);
        if (pose.mirror && info.delim_a && info.delim_b) std::swap(info.delim_a, info.delim_b);
    }
    if (sheet) {
        Point2 a = pose.apply(sheet->lo), b = pose.apply(sheet->hi);
        Point2 c = pose.apply(Point2{sheet->lo.x, sheet->hi.y});
        Point2 d = pose.apply(Point2{sheet->hi.x, sheet->lo.y});
        sheet = Rect{{std::min({a.x, b.x, c.x, d.x}), std::min({a.y, b.y, c.y, d.y})},
                     {std::max({a.x, b.x, c.x, d.x}), std::max({a.y, b.y, c.y, d.y})}};
    }
}

void CreasePattern::merge(const CreasePattern& other, double merge_eps) {
    std::vector<int> remap(other.vertices.size());
    for (size_t i = 0; i < other.vertices.size(); ++i)
        remap[i] = add_vertex(other.vertices[i], other.vinfo[i], merge_eps);
    for (const auto& c : other.creases) {
        Crease nc = c;
        nc.a = remap[c.a];
        if (!c.is_ray()) nc.b = remap[c.b];
        creases.push_back(nc);
    }
}

Rect CreasePattern::bounds() const {
    Rect r{{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()},
           {std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()}};
    for (const auto& v : vertices) {
        r.lo.x = std::min(r.lo.x, v.x);
        r.lo.y = std::min(r.lo.y, v.y);
        r.hi.x = std::max(r.hi.x, v.x);
        r.hi.y = std::max(r.hi.y, v.y);
    }
    return r;
}

std::vector<IncidentCrease> incident_creases(const CreasePattern& cp, int v) {
    std::vector<IncidentCrease> out;
    for (size_t i = 0; i < cp.creases.size(); ++i) {
        const Crease& c = cp.creases[i];
        if (c.a == v) {
            Vec2 d = c.is_ray() ? c.dir : normalized(cp.vertices[c.b] - cp.vertices[c.a]);
            out.push_back({static_cast<int>(i), d, c.fold});
        } else if (!c.is_ray() && c.b == v) {
            out.push_back({static_cast<int>(i), normalized(cp.vertices[c.a] - cp.vertices[c.b]),
                           c.fold});
        }
    }
    return out;
}

namespace {

std::vector<IncidentCrease> sorted_by_angle(std::vector<IncidentCrease> inc) {
    std::sort(inc.begin(), inc.end(), [](const IncidentCrease& a, const IncidentCrease& b) {
        return angle_of(a.dir) < angle_of(b.dir);
    });
    return inc;
}

}  // namespace

double kawasaki_defect(const CreasePattern& cp, int v, const Tolerance&) {
    if (cp.vinfo[v].cls != VertexClass::Interior)
        throw Error("kawasaki_defect: vertex not Interior");
    auto inc = sorted_by_angle(incident_creases(cp, v));
    if (inc.size() < 2) throw Error("kawasaki_defect: fewer than 2 incident creases");
    double sum = 0.0;
    for (size_t k = 0; k < inc.size(); ++k) {
        Vec2 a = inc[k].dir;
        Vec2 b = inc[(k + 1) % inc.size()].dir;
        double sector = ccw_angle(a, b);
        if (k + 1 == inc.size() && inc.size() == 1) sector = 2.0 * pi;
        sum += (k % 2 == 0 ? sector : -sector);
    }
    return sum;
}

double boundary_defect(const CreasePattern& cp, int v, double expected, const Tolerance& tol) {
    const VertexInfo& info = cp.vinfo[v];
    if (info.cls != VertexClass::FoldedBoundary || !info.delim_a || !info.delim_b)
        throw Error("boundary_defect: vertex lacks folded-boundary delimiters");
    auto inc = incident_creases(cp, v);
    double span = ccw_angle(*info.delim_a, *info.delim_b);
    if (span <= 0.0) span = 2.0 * pi;
    struct Entry {
        double off;
        Vec2 dir;
    };
    std::vector<Entry> kept;
    for (const auto& ic : inc) {
        double off = ccw_angle(*info.delim_a, ic.dir);
        if (off > 2.0 * pi - 1e-9) off = 0.0;
        if (off <= span + 1e-9) kept.push_back({off, ic.dir});
    }
    std::sort(kept.begin(), kept.end(), [](const Entry& a, const Entry& b) { return a.off < b.off; });
    if (kept.size() < 2) throw Error("boundary_defect: folded region has no sectors");
    int ref_sector = 0;
    if (info.pos_ref) {
        double roff = ccw_angle(*info.delim_a, *info.pos_ref);
        for (size_t k = 0; k + 1 < kept.size(); ++k)
            if (roff >= kept[k].off - 1e-12 && roff <= kept[k + 1].off + 1e-12)
                ref_sector = static_cast<int>(k);
    }
    double sum = 0.0;
    for (size_t k = 0; k + 1 < kept.size(); ++k) {
        double sector = kept[k + 1].off - kept[k].off;
        int sign = ((static_cast<int>(k) - ref_sector) % 2 == 0) ? 1 : -1;
        sum += sign * sector;
    }
    (void)tol;
    return sum - expected;
}

int maekawa_check(const CreasePattern& cp, int v) {
    if (cp.vinfo[v].cls != VertexClass::Interior)
        throw Error("maekawa_check: vertex not Interior");
    int m = 0, vl = 0;
    for (const auto& ic : incident_creases(cp, v)) {
        if (ic.fold == Fold::Mountain)
            ++m;
        else if (ic.fold == Fold::Valley)
            ++vl;
        else
            throw Error("maekawa_check: unassigned crease at interior vertex");
    }
    return m - vl;
}

namespace {

struct Seg {
    Point2 p;
    Vec2 d;       // unit
    double tmax;  // length, or +inf for rays
    int a, b;
};

Seg as_seg(const CreasePattern& cp, const Crease& c) {
    if (c.is_ray())
        return Seg{cp.vertices[c.a], c.dir, std::numeric_limits<double>::infinity(), c.a, -1};
    Vec2 w = cp.vertices[c.b] - cp.vertices[c.a];
    double len = norm(w);
    return Seg{cp.vertices[c.a], (1.0 / len) * w, len, c.a, c.b};
}

bool shares_vertex(const Seg& s, const Seg& t) {
    return s.a == t.a || (t.b >= 0 && s.a == t.b) || (s.b >= 0 && (s.b == t.a || s.b == t.b));
}

}  // namespace

std::vector<Diagnostic> validate_pattern(const CreasePattern& cp, const Tolerance& tol) {
    std::vector<Diagnostic> out;
    auto add = [&](Diagnostic::Kind k, const std::string& m) { out.push_back({k, m}); };

    for (size_t i = 0; i < cp.creases.size(); ++i) {
        const Crease& c = cp.creases[i];
        if (c.a < 0 || c.a >= static_cast<int>(cp.vertices.size()) ||
            (!c.is_ray() && (c.b < 0 || c.b >= static_cast<int>(cp.vertices.size())))) {
            add(Diagnostic::BadCrease, "crease " + std::to_string(i) + " has bad endpoints");
            continue;
        }
        if (!c.is_ray() && dist(cp.vertices[c.a], cp.vertices[c.b]) <= tol.eps_len)
            add(Diagnostic::BadCrease, "crease " + c.label + " is degenerate");
    }

    // Pairwise planarity.
    std::vector<Seg> segs;
    segs.reserve(cp.creases.size());
    for (const auto& c : cp.creases) segs.push_back(as_seg(cp, c));
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            const Seg& s = segs[i];
            const Seg& t = segs[j];
            auto pr = intersect_params(s.p, s.d, t.p, t.d, tol);
            if (!pr) {
                // Parallel: check collinear overlap.
                if (std::fabs(cross(s.d, t.p - s.p)) > tol.eps_len) continue;
                double u0 = dot(t.p - s.p, s.d);
                double u1 = u0 + (std::isinf(t.tmax) ? (dot(t.d, s.d) > 0 ? 1e30 : -1e30)
                                                     : t.tmax * dot(t.d, s.d));
                double lo = std::min(u0, u1), hi = std::max(u0, u1);
                double overlap = std::min(hi, std::isinf(s.tmax) ? 1e30 : s.tmax) - std::max(lo, 0.0);
                if (overlap > tol.eps_len * 10.0)
                    add(Diagnostic::Overlap, "creases " + cp.creases[i].label + " and " +
                                                 cp.creases[j].label + " overlap");
                continue;
            }
            double ta = pr->first, tb = pr->second;
            bool in_a = ta > -tol.eps_len && ta < s.tmax + tol.eps_len;
            bool in_b = tb > -tol.eps_len && tb < t.tmax + tol.eps_len;
            if (!in_a || !in_b) continue;
            bool int_a = ta > tol.eps_len && ta < s.tmax - tol.eps_len;
            bool int_b = tb > tol.eps_len && tb < t.tmax - tol.eps_len;
            if (int_a && int_b) {
                add(Diagnostic::Crossing, "creases " + cp.creases[i].label + " and " +
                                              cp.creases[j].label + " cross");
            } else if (int_a != int_b && !shares_vertex(s, t)) {
                // Endpoint of one lies in the interior of the other (T junction).
                add(Diagnostic::VertexOnCrease, "crease " + cp.creases[i].label +
                                                    " touches interior of " + cp.creases[j].label);
            }
        }
    }

    // Local foldability from stored vertex classes.
    for (size_t v = 0; v < cp.vertices.size(); ++v) {
        const VertexInfo& info = cp.vinfo[v];
        if (info.cls == VertexClass::Interior) {
            auto inc = incident_creases(cp, static_cast<int>(v));
            if (inc.size() < 2) continue;
            bool assigned = true;
            for (const auto& ic : inc)
                if (ic.fold != Fold::Mountain && ic.fold != Fold::Valley) assigned = false;
            if (!assigned) {
                add(Diagnostic::UnassignedCrease,
                    "interior vertex " + std::to_string(v) + " has unassigned creases");
                continue;
            }
            double kd = kawasaki_defect(cp, static_cast<int>(v), tol);
            if (std::fabs(kd) > tol.eps_ang)
                add(Diagnostic::KawasakiViolation, "vertex " + std::to_string(v) +
                                                       " kawasaki defect " + std::to_string(kd));
            int mk = maekawa_check(cp, static_cast<int>(v));
            if (mk != 2 && mk != -2)
                add(Diagnostic::MaekawaViolation,
                    "vertex " + std::to_string(v) + " maekawa M-V=" + std::to_string(mk));
        } else if (info.cls == VertexClass::FoldedBoundary && info.target && info.delim_a &&
                   info.delim_b) {
            double bd = boundary_defect(cp, static_cast<int>(v), *info.target, tol);
            if (std::fabs(bd) > tol.eps_ang)
                add(Diagnostic::BoundaryViolation, "vertex " + std::to_string(v) +
                                                       " boundary defect " + std::to_string(bd));
        }
    }
    return out;
}

const char* fold_letter(Fold f) {
    switch (f) {
        case Fold::Mountain: return "M";
        case Fold::Valley: return "V";
        case Fold::Boundary: return "B";
        case Fold::Flat: return "F";
    }
    return "F";
}

}  // namespace oriex
