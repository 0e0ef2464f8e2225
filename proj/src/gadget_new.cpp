#include "oriex/gadget_new.hpp"

#include <cmath>
#include <sstream>

namespace oriex {

NewLengths new_lengths(const GadgetSpec& spec, const Tolerance& tol) {
    double g = spec.gamma();
    GammaSplit gs = gamma_split(g, spec.delta_l, spec.delta_r, tol);
    double sgd = std::sin(g + spec.delta_l + spec.delta_r);
    NewLengths out{};
    double ac[2];
    for (int side = 0; side < 2; ++side) {
        double beta = side == 0 ? spec.beta_l : spec.beta_r;
        double delta = side == 0 ? spec.delta_l : spec.delta_r;
        double delta_o = side == 0 ? spec.delta_r : spec.delta_l;
        double gsig = side == 0 ? gs.gamma_l : gs.gamma_r;
        ac[side] = 1.0 / (std::cos(gsig) * (1.0 - std::tan(gsig) * std::tan(delta)));
        double bc = (std::cos(delta_o) - std::cos(g + delta_o)) / sgd;
        double bg = 1.0 / (std::sin(beta) / std::tan(gsig / 2.0) - std::cos(beta));
        double ci = (ac[side] - 1.0) /
                    (2.0 * std::cos(gsig) * (std::sin(beta) * std::tan(gsig) - std::cos(beta)));
        if (side == 0) {
            out.bc_l = bc;
            out.bg_l = bg;
            out.ci_l = ci;
        } else {
            out.bc_r = bc;
            out.bg_r = bg;
            out.ci_r = ci;
        }
    }
    if (std::fabs(ac[0] - ac[1]) > 1e-9 * std::max(1.0, std::fabs(ac[0])))
        throw ConstructionError("new_lengths: AC mismatch between sides");
    out.ac = ac[0];
    double r = spec.ridge_len;
    out.ac *= r;
    out.bc_l *= r;
    out.bc_r *= r;
    out.bg_l *= r;
    out.bg_r *= r;
    out.ci_l *= r;
    out.ci_r *= r;
    return out;
}

namespace {

struct SidePoints {
    SideCase kase;
    Point2 e, g;
    std::optional<Point2> h;
    int ve = -1, vg = -1, vh = -1;
};

}  // namespace

NewGadgetCP construct_new(const GadgetSpec& spec, const std::optional<Pose>& pose,
                          const NewGadgetOptions& opts, const Tolerance& tol,
                          double inserted_width) {
    auto viol = validate_new(spec, tol);
    if (!viol.empty()) {
        std::ostringstream os;
        os << "construct_new:";
        for (auto& v : viol) os << " " << v << ";";
        throw DomainError(os.str());
    }
    if (inserted_width < 0.0) throw DomainError("construct_new: negative insertion width");

    Frame fr = make_frame(spec);
    double g = fr.gamma;
    GammaSplit gs = gamma_split(g, spec.delta_l, spec.delta_r, tol);

    NewGadgetCP out;
    out.spec = spec;
    out.split = gs;
    out.opts = opts;
    out.variant_b = opts.variant_b;
    out.inserted_width = inserted_width;
    out.pose = pose ? *pose : canonical_pose(spec);
    out.a = fr.a;
    out.b_l = fr.b_l;
    out.b_r = fr.b_r;
    out.c = fr.c;

    Vec2 axis = normalized(fr.c - fr.a);
    double axis_ang = angle_of(axis);
    if (std::fabs(normalize_angle(axis_ang - gs.gamma_l)) > 1e-7)
        throw ConstructionError("construct_new: C off the gamma split direction");
    out.d = fr.a + spec.ridge_len * axis;

    SidePoints sp[2];
    for (int side = 0; side < 2; ++side) {
        double beta = side == 0 ? spec.beta_l : spec.beta_r;
        double delta = side == 0 ? spec.delta_l : spec.delta_r;
        double gsig = side == 0 ? gs.gamma_l : gs.gamma_r;
        Point2 b = side == 0 ? fr.b_l : fr.b_r;
        SidePoints& s = sp[side];
        s.e = circumcenter(b, fr.c, out.d, tol);
        // Internal identity: angle A-B-E = pi/2 + gamma_s/2 + delta.
        double abe = angle_at(b, fr.a, s.e);
        if (std::fabs(abe - (pi / 2 + gsig / 2 + delta)) > 1e-7)
            throw ConstructionError("construct_new: E_sigma angle check failed");
        double phi = beta + gsig / 2 - pi / 2;
        bool eq = std::fabs(phi) <= tol.eps_ang;
        Line ae = Line::through(fr.a, s.e);
        if (delta <= tol.eps_ang) {
            s.kase = eq ? SideCase::EqDelta0 : SideCase::StrictDelta0;
            if (eq) {
                s.g = s.e;
            } else {
                auto gv = intersect_lines(Line::at(b, fr.from_b(side, pi - beta)), ae, tol);
                if (!gv) throw ConstructionError("construct_new: G_sigma not found");
                s.g = *gv;
            }
        } else {
            s.kase = eq ? SideCase::EqDeltaPos : SideCase::StrictDeltaPos;
            auto hv = intersect_lines(Line::at(b, fr.from_b(side, pi / 2 + gsig / 2)), ae, tol);
            if (!hv) throw ConstructionError("construct_new: H_sigma not found");
            s.h = *hv;
            if (eq) {
                s.g = *hv;
            } else {
                auto gv = intersect_lines(Line::at(b, fr.from_b(side, pi - beta)), ae, tol);
                if (!gv) throw ConstructionError("construct_new: G_sigma not found");
                s.g = *gv;
            }
        }
        // Condition (iv) guarantees A, G, (H), E_sigma in order on the segment.
        double te = dot(s.e - fr.a, ae.d);
        double tg = dot(s.g - fr.a, ae.d);
        if (tg < -tol.eps_len || tg > te + tol.eps_len)
            throw ConstructionError("construct_new: G_sigma off segment A-E");
        if (s.h) {
            double th = dot(*s.h - fr.a, ae.d);
            if (th < tg - tol.eps_len || th > te + tol.eps_len)
                throw ConstructionError("construct_new: H_sigma off segment G-E");
        }
    }
    out.case_l = sp[0].kase;
    out.case_r = sp[1].kase;

    auto fv = intersect_lines(Line::through(fr.a, fr.c), Line::through(sp[0].e, sp[1].e), tol);
    if (!fv) throw ConstructionError("construct_new: F not found");
    out.f = *fv;
    for (int side = 0; side < 2; ++side) {
        auto iv = intersect_lines(Line::through(sp[0].e, sp[1].e),
                                  Line::at(fr.c, fr.j_dir(side)), tol);
        if (!iv) throw ConstructionError("construct_new: I_sigma not found");
        (side == 0 ? out.i_l : out.i_r) = *iv;
    }
    out.e_l = sp[0].e;
    out.e_r = sp[1].e;
    out.g_l = sp[0].g;
    out.g_r = sp[1].g;
    out.h_l = sp[0].h;
    out.h_r = sp[1].h;

    // Face insertion splits the pattern along A-D-C-(beyond C) and shifts the
    // right side by the inserted width; E_L E_R stays one straight crease.
    double w = inserted_width;
    Vec2 nhat = perp(axis);
    Vec2 shift = w * nhat;
    out.a2 = fr.a + shift;
    out.c2 = fr.c + shift;
    out.d2 = out.d + shift;
    if (w > 0.0) {
        out.b_r = out.b_r + shift;
        out.e_r = out.e_r + shift;
        out.g_r = out.g_r + shift;
        if (out.h_r) out.h_r = *out.h_r + shift;
        out.i_r = out.i_r + shift;
    }

    CreasePattern& cp = out.cp;
    const double a_gam = spec.alpha;

    // Vertex infos.
    int va = cp.add_vertex(fr.a, {VertexClass::FoldedBoundary, {}, {}, {}, {}});
    int va2 = va;
    if (w > 0.0) va2 = cp.add_vertex(out.a2, {VertexClass::FoldedBoundary, {}, {}, {}, {}});

    int vb[2], ve[2], vg[2], vh[2] = {-1, -1};
    int vd = -1, vd2 = -1;
    Point2 dpt[2] = {out.d, out.d2};
    Point2 bpt[2] = {out.b_l, out.b_r};
    Point2 ept[2] = {out.e_l, out.e_r};
    Point2 gpt[2] = {out.g_l, out.g_r};
    std::optional<Point2> hpt[2] = {out.h_l, out.h_r};

    for (int side = 0; side < 2; ++side) {
        Vec2 kd = fr.j_dir(side);
        Vec2 gd = normalized(gpt[side] - bpt[side]);
        auto [d1, d2] = order_delims(kd, gd, fr.l_dir(side));
        vb[side] = cp.add_vertex(bpt[side], {VertexClass::FoldedBoundary, 0.0, d1, d2, {}});
    }
    {
        // D: folded sectors between the chain creases toward G_L and G_R,
        // the sector holding the C direction positive; target alpha.
        // With an inserted face each copy keeps its own side plus the strip
        // crease; target becomes alpha_sigma + pi/2.
        if (w <= 0.0) {
            Vec2 gl = normalized(gpt[0] - out.d);
            Vec2 gr = normalized(gpt[1] - out.d);
            auto [d1, d2] = order_delims(gl, gr, axis);
            vd = cp.add_vertex(out.d, {VertexClass::FoldedBoundary, a_gam, d1, d2, axis});
            vd2 = vd;
        } else {
            double alpha_l = pi - spec.beta_l - gs.gamma_l;
            double alpha_r = pi - spec.beta_r - gs.gamma_r;
            Vec2 gl = normalized(gpt[0] - out.d);
            auto [l1, l2] = order_delims(gl, nhat, axis);
            vd = cp.add_vertex(out.d,
                               {VertexClass::FoldedBoundary, alpha_l + pi / 2, l1, l2, axis});
            Vec2 gr = normalized(gpt[1] - out.d2);
            auto [r1, r2] = order_delims(gr, -1.0 * nhat, axis);
            vd2 = cp.add_vertex(out.d2,
                                {VertexClass::FoldedBoundary, alpha_r + pi / 2, r1, r2, axis});
        }
    }
    for (int side = 0; side < 2; ++side) {
        const SidePoints& s = sp[side];
        Point2 dd = dpt[side];
        if (s.kase == SideCase::EqDelta0) {
            // E = G on the folded boundary.
            Vec2 bd = normalized(bpt[side] - ept[side]);
            Vec2 ddir = normalized(dd - ept[side]);
            Vec2 inner = fr.l_dir(side);
            auto [d1, d2] = order_delims(bd, ddir, inner);
            ve[side] = cp.add_vertex(ept[side], {VertexClass::FoldedBoundary, 0.0, d1, d2, {}});
            vg[side] = ve[side];
        } else {
            ve[side] = cp.add_vertex(ept[side], {VertexClass::Interior, {}, {}, {}, {}});
            Vec2 bd = normalized(bpt[side] - gpt[side]);
            Vec2 ddir = normalized(dd - gpt[side]);
            Vec2 inner = normalized(ept[side] - gpt[side]);
            auto [d1, d2] = order_delims(bd, ddir, inner);
            vg[side] = cp.add_vertex(gpt[side], {VertexClass::FoldedBoundary, 0.0, d1, d2, {}});
            if (s.kase == SideCase::StrictDeltaPos)
                vh[side] = cp.add_vertex(*hpt[side], {VertexClass::Interior, {}, {}, {}, {}});
            else if (s.kase == SideCase::EqDeltaPos)
                vh[side] = vg[side];
        }
    }

    // Rays.
    out.j_l = {fr.a, fr.j_dir(0)};
    out.j_r = {out.a2, fr.j_dir(1)};
    out.k_l = {out.b_l, fr.j_dir(0)};
    out.k_r = {out.b_r, fr.j_dir(1)};
    out.l_l = {out.b_l, fr.l_dir(0)};
    out.l_r = {out.b_r, fr.l_dir(1)};
    out.m_l = {out.e_l, fr.l_dir(0)};
    out.m_r = {out.e_r, fr.l_dir(1)};
    if (opts.include_jk) {
        cp.add_ray(va, out.j_l.dir, Fold::Mountain, "jL");
        cp.add_ray(va2, out.j_r.dir, Fold::Mountain, "jR");
        cp.add_ray(vb[0], out.k_l.dir, Fold::Valley, "kL");
        cp.add_ray(vb[1], out.k_r.dir, Fold::Valley, "kR");
    }
    cp.add_ray(vb[0], out.l_l.dir, Fold::Mountain, "lL");
    cp.add_ray(vb[1], out.l_r.dir, Fold::Mountain, "lR");
    cp.add_ray(ve[0], out.m_l.dir, Fold::Valley, "mL");
    cp.add_ray(ve[1], out.m_r.dir, Fold::Valley, "mR");

    // Common creases.
    cp.add_segment(va, vb[0], Fold::Mountain, "A-BL");
    cp.add_segment(va2, vb[1], Fold::Mountain, "A-BR");
    cp.add_segment(va, vd, Fold::Mountain, "A-D");
    if (w > 0.0) {
        cp.add_segment(va2, vd2, Fold::Mountain, "A-D.r");
        cp.add_segment(va, va2, Fold::Mountain, "AL-AR");
        cp.add_segment(vd, vd2, Fold::Mountain, "DL-DR");
    }
    cp.add_segment(ve[0], ve[1], Fold::Valley, "EL-ER");

    // Per-side creases by Table case.
    const char* sn[2] = {"L", "R"};
    for (int side = 0; side < 2; ++side) {
        const SidePoints& s = sp[side];
        std::string S = sn[side];
        int vaS = side == 0 ? va : va2;
        int vdS = side == 0 ? vd : vd2;
        switch (s.kase) {
            case SideCase::StrictDelta0:
                cp.add_segment(vaS, vg[side], Fold::Valley, "A-G" + S);
                cp.add_segment(vg[side], ve[side], Fold::Valley, "G" + S + "-E" + S);
                cp.add_segment(vb[side], vg[side], Fold::Mountain, "B" + S + "-G" + S);
                cp.add_segment(vdS, ve[side], Fold::Mountain, "D-E" + S);
                cp.add_segment(vdS, vg[side], Fold::Valley, "D-G" + S);
                break;
            case SideCase::StrictDeltaPos:
                cp.add_segment(vaS, vg[side], Fold::Valley, "A-G" + S);
                cp.add_segment(vg[side], vh[side], Fold::Valley, "G" + S + "-H" + S);
                cp.add_segment(vh[side], ve[side],
                               opts.variant_b ? Fold::Mountain : Fold::Valley,
                               "H" + S + "-E" + S);
                cp.add_segment(vb[side], ve[side],
                               opts.variant_b ? Fold::Valley : Fold::Mountain,
                               "B" + S + "-E" + S);
                cp.add_segment(vb[side], vg[side],
                               opts.variant_b ? Fold::Valley : Fold::Mountain,
                               "B" + S + "-G" + S);
                cp.add_segment(vb[side], vh[side],
                               opts.variant_b ? Fold::Mountain : Fold::Valley,
                               "B" + S + "-H" + S);
                cp.add_segment(vdS, vh[side], Fold::Mountain, "D-H" + S);
                cp.add_segment(vdS, vg[side], Fold::Valley, "D-G" + S);
                break;
            case SideCase::EqDelta0:
                cp.add_segment(vaS, ve[side], Fold::Valley, "A-E" + S);
                cp.add_segment(vb[side], ve[side], Fold::Mountain, "B" + S + "-E" + S);
                cp.add_segment(vdS, ve[side], Fold::Valley, "D-E" + S);
                break;
            case SideCase::EqDeltaPos:
                cp.add_segment(vaS, vg[side], Fold::Valley, "A-G" + S);
                cp.add_segment(vg[side], ve[side], Fold::Valley, "G" + S + "-E" + S);
                cp.add_segment(vb[side], ve[side], Fold::Mountain, "B" + S + "-E" + S);
                cp.add_segment(vb[side], vg[side], Fold::Valley, "B" + S + "-G" + S);
                cp.add_segment(vdS, vg[side], Fold::Mountain, "D-G" + S);
                break;
        }
    }

    if (opts.sheet) {
        Rect b = cp.bounds();
        double pleat = std::max(dist(out.b_l, fr.c), dist(out.b_r, out.c2)) / 2.0;
        double m = 1.5 * pleat;
        cp.sheet = Rect{{b.lo.x - m, b.lo.y - m}, {b.hi.x + m, b.hi.y + m}};
    }

    Pose p = pose ? *pose : canonical_pose(spec);
    cp.transform(p);
    for (Point2* pt : {&out.a, &out.b_l, &out.b_r, &out.c, &out.d, &out.e_l, &out.e_r, &out.f,
                       &out.g_l, &out.g_r, &out.i_l, &out.i_r, &out.a2, &out.c2, &out.d2})
        *pt = p.apply(*pt);
    if (out.h_l) out.h_l = p.apply(*out.h_l);
    if (out.h_r) out.h_r = p.apply(*out.h_r);
    for (Ray2* r : {&out.j_l, &out.j_r, &out.k_l, &out.k_r, &out.l_l, &out.l_r, &out.m_l,
                    &out.m_r})
        *r = Ray2{p.apply(r->origin), p.apply_dir(r->dir)};
    return out;
}

}  // namespace oriex
