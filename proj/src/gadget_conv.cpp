#include "oriex/gadget_conv.hpp"

#include <cmath>
#include <sstream>

namespace oriex {

double bd_length(const GadgetSpec& spec, int side) {
    double beta = side == 0 ? spec.beta_l : spec.beta_r;
    return spec.ridge_len * std::tan(spec.gamma() / 2.0) / (2.0 * std::sin(beta));
}

ConvGadgetCP construct_conventional(const GadgetSpec& spec, const std::optional<Pose>& pose,
                                    const GadgetOptions& opts, const Tolerance& tol) {
    auto viol = validate_conv(spec, tol);
    if (!viol.empty()) {
        std::ostringstream os;
        os << "construct_conventional:";
        for (auto& v : viol) os << " " << v << ";";
        throw DomainError(os.str());
    }
    Frame fr = make_frame(spec);
    ConvGadgetCP g;
    g.spec = spec;
    g.a = fr.a;
    g.b_l = fr.b_l;
    g.b_r = fr.b_r;
    g.c = fr.c;

    for (int side = 0; side < 2; ++side) {
        Point2 b = side == 0 ? fr.b_l : fr.b_r;
        double beta = side == 0 ? spec.beta_l : spec.beta_r;
        Line bis = perpendicular_bisector(b, fr.c);
        auto d = intersect_lines(Line::at(b, fr.from_b(side, pi - beta)), bis, tol);
        if (!d) throw ConstructionError("conventional gadget: D_sigma not found");
        (side == 0 ? g.d_l : g.d_r) = *d;
    }

    CreasePattern& cp = g.cp;
    g.va = cp.add_vertex(g.a, {VertexClass::FoldedBoundary, {}, {}, {}, {}});
    auto binfo = [&](int side, Point2 b, Point2 d) {
        Vec2 kd = fr.j_dir(side);
        Vec2 gd = normalized(d - b);
        auto [a1, a2] = order_delims(kd, gd, fr.l_dir(side));
        return VertexInfo{VertexClass::FoldedBoundary, 0.0, a1, a2, {}};
    };
    g.vb_l = cp.add_vertex(g.b_l, binfo(0, g.b_l, g.d_l));
    g.vb_r = cp.add_vertex(g.b_r, binfo(1, g.b_r, g.d_r));
    g.vd_l = cp.add_vertex(g.d_l, {VertexClass::FoldedBoundary, {}, {}, {}, {}});
    g.vd_r = cp.add_vertex(g.d_r, {VertexClass::FoldedBoundary, {}, {}, {}, {}});

    g.j_l = {g.a, fr.j_dir(0)};
    g.j_r = {g.a, fr.j_dir(1)};
    g.k_l = {g.b_l, fr.j_dir(0)};
    g.k_r = {g.b_r, fr.j_dir(1)};
    g.l_l = {g.b_l, fr.l_dir(0)};
    g.l_r = {g.b_r, fr.l_dir(1)};
    g.m_l = {g.d_l, fr.l_dir(0)};
    g.m_r = {g.d_r, fr.l_dir(1)};

    if (opts.include_jk) {
        cp.add_ray(g.va, g.j_l.dir, Fold::Mountain, "jL");
        cp.add_ray(g.va, g.j_r.dir, Fold::Mountain, "jR");
        cp.add_ray(g.vb_l, g.k_l.dir, Fold::Valley, "kL");
        cp.add_ray(g.vb_r, g.k_r.dir, Fold::Valley, "kR");
    }
    cp.add_ray(g.vb_l, g.l_l.dir, Fold::Mountain, "lL");
    cp.add_ray(g.vb_r, g.l_r.dir, Fold::Mountain, "lR");
    cp.add_ray(g.vd_l, g.m_l.dir, Fold::Valley, "mL");
    cp.add_ray(g.vd_r, g.m_r.dir, Fold::Valley, "mR");
    cp.add_segment(g.va, g.vb_l, Fold::Mountain, "A-BL");
    cp.add_segment(g.va, g.vb_r, Fold::Mountain, "A-BR");
    cp.add_segment(g.vb_l, g.vd_l, Fold::Mountain, "BL-DL");
    cp.add_segment(g.vb_r, g.vd_r, Fold::Mountain, "BR-DR");
    cp.add_segment(g.va, g.vd_l, Fold::Valley, "A-DL");
    cp.add_segment(g.va, g.vd_r, Fold::Valley, "A-DR");
    cp.add_segment(g.vd_l, g.vd_r, Fold::Valley, "DL-DR");

    if (opts.sheet) {
        Rect b = cp.bounds();
        double pleat = std::max(dist(g.b_l, fr.c), dist(g.b_r, fr.c)) / 2.0;
        double m = 1.5 * pleat;
        cp.sheet = Rect{{b.lo.x - m, b.lo.y - m}, {b.hi.x + m, b.hi.y + m}};
    }

    Pose p = pose ? *pose : canonical_pose(spec);
    cp.transform(p);
    for (Point2* pt : {&g.a, &g.b_l, &g.b_r, &g.c, &g.d_l, &g.d_r}) *pt = p.apply(*pt);
    for (Ray2* r : {&g.j_l, &g.j_r, &g.k_l, &g.k_r, &g.l_l, &g.l_r, &g.m_l, &g.m_r})
        *r = Ray2{p.apply(r->origin), p.apply_dir(r->dir)};
    return g;
}

}  // namespace oriex
