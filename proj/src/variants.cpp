#include "oriex/variants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace oriex {

namespace {

GadgetSpec mirrored_spec(const GadgetSpec& s) {
    return GadgetSpec{s.alpha, s.beta_r, s.beta_l, s.delta_r, s.delta_l, s.ridge_len};
}

void require_delta0_new(const GadgetSpec& spec, const Tolerance& tol, const char* who) {
    if (spec.delta_l > tol.eps_ang || spec.delta_r > tol.eps_ang)
        throw DomainError(std::string(who) + ": requires delta_l = delta_r = 0");
    auto viol = validate_new(spec, tol);
    if (!viol.empty()) {
        std::ostringstream os;
        os << who << ":";
        for (auto& v : viol) os << " " << v << ";";
        throw DomainError(os.str());
    }
}

}  // namespace

NegativeGadgetCP construct_negative_first(const GadgetSpec& spec0,
                                          const std::optional<Pose>& pose,
                                          const GadgetOptions& opts, const Tolerance& tol) {
    require_delta0_new(spec0, tol, "construct_negative_first");
    double g = spec0.gamma();
    if (!(g < 2.0 * pi / 3.0 - tol.eps_ang))
        throw DomainError("construct_negative_first: gamma >= 2pi/3");
    bool q_l = spec0.beta_l <= pi / 2 + g / 4 + tol.eps_ang;
    bool q_r = spec0.beta_r <= pi / 2 + g / 4 + tol.eps_ang;
    if (!q_l && !q_r)
        throw DomainError("construct_negative_first: no side with beta <= pi/2 + gamma/4");
    bool mirror = !q_l;
    GadgetSpec spec = mirror ? mirrored_spec(spec0) : spec0;

    Frame fr = make_frame(spec);
    Vec2 ac = normalized(fr.c - fr.a);
    Point2 D = fr.a + spec.ridge_len * ac;
    Point2 E[2], G[2];
    for (int s = 0; s < 2; ++s) {
        Point2 b = s == 0 ? fr.b_l : fr.b_r;
        E[s] = circumcenter(b, fr.c, D, tol);
        double beta = s == 0 ? spec.beta_l : spec.beta_r;
        auto gg = intersect_lines(Line::at(b, fr.from_b(s, pi - beta)),
                                  Line::through(fr.a, E[s]), tol);
        if (!gg) throw ConstructionError("negative 1: G not found");
        G[s] = *gg;
    }
    // G'_R on segment A E_R via the ray from G_L through D; P_R on m_R via the
    // ray from E_L through C.
    auto gpr = intersect_params(G[0], normalized(D - G[0]), fr.a, normalized(E[1] - fr.a), tol);
    if (!gpr || gpr->first < -tol.eps_len || gpr->second < -tol.eps_len ||
        gpr->second > dist(fr.a, E[1]) + tol.eps_len)
        throw ConstructionError("negative 1: G'_R not on segment A-E_R");
    Point2 GPR = fr.a + gpr->second * normalized(E[1] - fr.a);
    auto ppr = intersect_params(E[0], normalized(fr.c - E[0]), E[1], fr.l_dir(1), tol);
    if (!ppr || ppr->first < -tol.eps_len || ppr->second < -tol.eps_len)
        throw ConstructionError("negative 1: P_R not on ray m_R");
    Point2 PR = E[1] + ppr->second * fr.l_dir(1);

    NegativeGadgetCP out;
    out.spec = spec0;
    out.construction = 1;
    out.mirrored = mirror;
    out.a = fr.a;
    out.b_l = fr.b_l;
    out.b_r = fr.b_r;
    out.c = fr.c;
    out.d = D;
    out.e_l = E[0];
    out.e_r = E[1];
    out.g_l = G[0];
    out.gp_r = GPR;
    out.p_r = PR;

    CreasePattern& cp = out.cp;
    int va = cp.add_vertex(fr.a, {VertexClass::FoldedBoundary, {}, {}, {}, {}});
    int vb[2];
    {
        Vec2 gd = normalized(G[0] - fr.b_l);
        auto [d1, d2] = order_delims(fr.j_dir(0), gd, fr.l_dir(0));
        vb[0] = cp.add_vertex(fr.b_l, {VertexClass::FoldedBoundary, 0.0, d1, d2, {}});
        vb[1] = cp.add_vertex(fr.b_r, {VertexClass::FoldedBoundary, {}, {}, {}, {}});
    }
    int ve[2] = {cp.add_vertex(E[0], {VertexClass::Interior, {}, {}, {}, {}}),
                 cp.add_vertex(E[1], {VertexClass::Interior, {}, {}, {}, {}})};
    int vg = cp.add_vertex(G[0], {VertexClass::Interior, {}, {}, {}, {}});
    int vgp = cp.add_vertex(GPR, {VertexClass::Interior, {}, {}, {}, {}});
    int vp = cp.add_vertex(PR, {VertexClass::Interior, {}, {}, {}, {}});

    if (opts.include_jk) {
        cp.add_ray(va, fr.j_dir(0), Fold::Valley, "jL");
        cp.add_ray(va, fr.j_dir(1), Fold::Valley, "jR");
        cp.add_ray(vb[0], fr.j_dir(0), Fold::Mountain, "kL");
        cp.add_ray(vb[1], fr.j_dir(1), Fold::Mountain, "kR");
    }
    cp.add_ray(vb[0], fr.l_dir(0), Fold::Mountain, "lL");
    cp.add_ray(vb[1], fr.l_dir(1), Fold::Mountain, "lR");
    cp.add_ray(ve[0], fr.l_dir(0), Fold::Valley, "mL");
    cp.add_segment(ve[1], vp, Fold::Valley, "mR.0");
    cp.add_ray(vp, fr.l_dir(1), Fold::Valley, "mR.1");
    cp.add_segment(va, vb[0], Fold::Mountain, "A-BL");
    cp.add_segment(va, vb[1], Fold::Mountain, "A-BR");
    cp.add_segment(vb[1], ve[1], Fold::Mountain, "BR-ER");
    cp.add_segment(ve[0], vp, Fold::Mountain, "EL-PR");
    cp.add_segment(vg, vgp, Fold::Mountain, "GL-GPR");
    cp.add_segment(va, vg, Fold::Valley, "A-GL");
    cp.add_segment(vg, ve[0], Fold::Valley, "GL-EL");
    cp.add_segment(va, vgp, Fold::Valley, "A-GPR");
    cp.add_segment(vgp, ve[1], Fold::Valley, "GPR-ER");
    cp.add_segment(vb[0], vg, Fold::Valley, "BL-GL");
    cp.add_segment(vb[1], vgp, Fold::Valley, "BR-GPR");
    cp.add_segment(vb[1], vp, Fold::Valley, "BR-PR");
    cp.add_segment(ve[0], ve[1], Fold::Valley, "EL-ER");

    if (opts.sheet) {
        Rect bx = cp.bounds();
        double pleat = std::max(dist(fr.b_l, fr.c), dist(fr.b_r, fr.c)) / 2.0;
        double m = 1.5 * pleat;
        cp.sheet = Rect{{bx.lo.x - m, bx.lo.y - m}, {bx.hi.x + m, bx.hi.y + m}};
    }

    Pose p = pose ? *pose : canonical_pose(spec0);
    if (mirror) {
        // Built with swapped sides in the natural frame; reflect about the
        // wedge bisector to restore the caller's orientation.
        Pose unm;
        unm.mirror = true;
        unm.rot = spec0.gamma();
        cp.transform(unm);
        auto fix = [&](Point2& pt) { pt = unm.apply(pt); };
        fix(out.a);
        fix(out.b_l);
        fix(out.b_r);
        fix(out.c);
        fix(out.d);
        fix(out.e_l);
        fix(out.e_r);
        std::swap(out.b_l, out.b_r);
        std::swap(out.e_l, out.e_r);
        if (out.g_l) out.g_l = unm.apply(*out.g_l);
        if (out.gp_r) out.gp_r = unm.apply(*out.gp_r);
        if (out.p_r) out.p_r = unm.apply(*out.p_r);
        // The qualifying side is physically R for the caller's spec.
        std::swap(out.g_l, out.g_r);
        std::swap(out.gp_r, out.gp_l);
        std::swap(out.p_r, out.p_l);
    }
    cp.transform(p);
    auto ap = [&](Point2& pt) { pt = p.apply(pt); };
    ap(out.a);
    ap(out.b_l);
    ap(out.b_r);
    ap(out.c);
    ap(out.d);
    ap(out.e_l);
    ap(out.e_r);
    auto apo = [&](std::optional<Point2>& pt) {
        if (pt) pt = p.apply(*pt);
    };
    apo(out.g_l);
    apo(out.gp_r);
    apo(out.p_r);
    return out;
}

double negative_theta(const GadgetSpec& spec, const Tolerance& tol) {
    double g = spec.gamma();
    bool l90 = std::fabs(spec.beta_l - pi / 2) <= tol.eps_ang;
    bool r90 = std::fabs(spec.beta_r - pi / 2) <= tol.eps_ang;
    if (l90 && r90) return 0.0;  // any admissible theta works; pick symmetry
    if (r90) return g / 2;
    if (l90) return -g / 2;
    double tl = std::tan(spec.beta_l), tr = std::tan(spec.beta_r);
    return std::atan((tr - tl) / (2.0 + (tl + tr) / std::tan(g / 2)));
}

ThetaLimits negative_theta_limits(const GadgetSpec& spec, const Tolerance&) {
    double g = spec.gamma();
    ThetaLimits out;
    double cand_l[3] = {g / 2, spec.beta_l + g / 2 - pi / 2, pi - g};
    double cand_r[3] = {g / 2, spec.beta_r + g / 2 - pi / 2, pi - g};
    out.theta_l = std::min({cand_l[0], cand_l[1], cand_l[2]});
    out.theta_r = std::min({cand_r[0], cand_r[1], cand_r[2]});
    out.l_exclusive = cand_l[2] <= std::min(cand_l[0], cand_l[1]);
    out.r_exclusive = cand_r[2] <= std::min(cand_r[0], cand_r[1]);
    return out;
}

NegativeGadgetCP construct_negative_second(const GadgetSpec& spec,
                                           std::optional<double> theta_override,
                                           const std::optional<Pose>& pose,
                                           const GadgetOptions& opts, const Tolerance& tol) {
    require_delta0_new(spec, tol, "construct_negative_second");
    double g = spec.gamma();
    bool both_low = spec.beta_l <= pi / 2 + tol.eps_ang && spec.beta_r <= pi / 2 + tol.eps_ang;
    bool both_high = spec.beta_l >= pi / 2 - tol.eps_ang && spec.beta_r >= pi / 2 - tol.eps_ang;
    if (!both_low && !both_high)
        throw DomainError("construct_negative_second: needs both beta on one side of pi/2");

    double theta = negative_theta(spec, tol);
    bool free_theta = std::fabs(spec.beta_l - pi / 2) <= tol.eps_ang &&
                      std::fabs(spec.beta_r - pi / 2) <= tol.eps_ang;
    if (theta_override) {
        if (!free_theta)
            throw DomainError("construct_negative_second: theta is determined by the angles");
        theta = *theta_override;
    }
    ThetaLimits lim = negative_theta_limits(spec, tol);
    auto infeasible = [&](const std::string& why) {
        std::ostringstream os;
        os << "negative 2 infeasible: " << why << " (theta=" << rad2deg(theta)
           << " deg, theta_l=" << rad2deg(lim.theta_l) << ", theta_r=" << rad2deg(lim.theta_r)
           << ", pi-gamma=" << rad2deg(pi - g) << ")";
        throw InfeasibleError(os.str());
    };
    double slack = tol.eps_ang;
    if (theta > lim.theta_r + slack || (lim.r_exclusive && theta > lim.theta_r - slack))
        infeasible("theta exceeds theta_R");
    if (-theta > lim.theta_l + slack || (lim.l_exclusive && -theta > lim.theta_l - slack))
        infeasible("theta exceeds theta_L");
    if (std::fabs(theta) >= pi - g - slack) infeasible("theta outside (gamma-pi, pi-gamma)");

    Frame fr = make_frame(spec);
    Vec2 ac = normalized(fr.c - fr.a);
    Point2 D = fr.a + spec.ridge_len * ac;
    Point2 E[2];
    for (int s = 0; s < 2; ++s)
        E[s] = circumcenter(s == 0 ? fr.b_l : fr.b_r, fr.c, D, tol);
    Vec2 eline = normalized(E[1] - E[0]);

    // B' = meeting point of the perpendiculars to k_L, k_R; the wrong pattern
    // fixes up by a theta/2 mirror rotation of the fold lines through D and C.
    auto bp = intersect_lines(Line::at(fr.b_l, perp(fr.j_dir(0))),
                              Line::at(fr.b_r, perp(fr.j_dir(1))), Tolerance{1e-12, 1e-12});
    Vec2 fold_dir = rotated(eline, theta / 2.0);
    Line gline = Line::at(D, fold_dir);
    Line pline = Line::at(fr.c, fold_dir);

    NegativeGadgetCP out;
    out.spec = spec;
    out.construction = 2;
    out.theta = theta;
    out.a = fr.a;
    out.b_l = fr.b_l;
    out.b_r = fr.b_r;
    out.c = fr.c;
    out.d = D;
    out.e_l = E[0];
    out.e_r = E[1];
    if (bp) out.b_prime = *bp;

    Point2 GP[2], PP[2];
    bool g_at_e[2], p_at_e[2];
    for (int s = 0; s < 2; ++s) {
        Point2 e = E[s];
        Vec2 aed = normalized(e - fr.a);
        auto gp = intersect_params(fr.a, aed, gline.p, gline.d, tol);
        if (!gp) infeasible("ear fold line parallel to A-E");
        double te = dist(fr.a, e);
        if (gp->first < tol.eps_len || gp->first > te + tol.eps_len)
            infeasible("ear fold line leaves segment A-E");
        g_at_e[s] = gp->first > te - tol.eps_len;
        GP[s] = fr.a + gp->first * aed;
        Vec2 md = fr.l_dir(s);
        auto pp = intersect_params(e, md, pline.p, pline.d, tol);
        if (!pp) infeasible("pleat fold line parallel to m");
        if (pp->first < -tol.eps_len) infeasible("pleat fold line behind E on m");
        p_at_e[s] = std::fabs(pp->first) <= tol.eps_len;
        PP[s] = e + std::max(0.0, pp->first) * md;
    }
    out.gp_l = GP[0];
    out.gp_r = GP[1];
    out.p_l = PP[0];
    out.p_r = PP[1];

    CreasePattern& cp = out.cp;
    int va = cp.add_vertex(fr.a, {VertexClass::FoldedBoundary, {}, {}, {}, {}});
    int vb[2], ve[2], vgp[2], vpp[2];
    bool b90[2] = {std::fabs(spec.beta_l - pi / 2) <= tol.eps_ang,
                   std::fabs(spec.beta_r - pi / 2) <= tol.eps_ang};
    double eps = 1e-9 * std::max(1.0, spec.ridge_len);
    for (int s = 0; s < 2; ++s) {
        vb[s] = cp.add_vertex(s == 0 ? fr.b_l : fr.b_r,
                              {VertexClass::FoldedBoundary, {}, {}, {}, {}});
        // At the rotation boundary the ear or pleat fold line lands on E and
        // the merged vertex sits on the folded-region boundary.
        VertexClass ecls = (b90[s] || g_at_e[s] || p_at_e[s]) ? VertexClass::FoldedBoundary
                                                              : VertexClass::Interior;
        ve[s] = cp.add_vertex(E[s], {ecls, {}, {}, {}, {}});
        vgp[s] = g_at_e[s] ? ve[s]
                           : cp.add_vertex(GP[s], {VertexClass::Interior, {}, {}, {}, {}}, eps);
        VertexClass pcls = b90[s] ? VertexClass::FoldedBoundary : VertexClass::Interior;
        vpp[s] = p_at_e[s] ? ve[s] : cp.add_vertex(PP[s], {pcls, {}, {}, {}, {}}, eps);
    }

    if (opts.include_jk) {
        cp.add_ray(va, fr.j_dir(0), Fold::Valley, "jL");
        cp.add_ray(va, fr.j_dir(1), Fold::Valley, "jR");
        cp.add_ray(vb[0], fr.j_dir(0), Fold::Mountain, "kL");
        cp.add_ray(vb[1], fr.j_dir(1), Fold::Mountain, "kR");
    }
    for (int s = 0; s < 2; ++s) {
        std::string S = s == 0 ? "L" : "R";
        cp.add_ray(vb[s], fr.l_dir(s), Fold::Mountain, "l" + S);
        if (vpp[s] != ve[s]) {
            cp.add_segment(ve[s], vpp[s], Fold::Valley, "m" + S + ".0");
            cp.add_ray(vpp[s], fr.l_dir(s), Fold::Valley, "m" + S + ".1");
        } else {
            cp.add_ray(ve[s], fr.l_dir(s), Fold::Valley, "m" + S);
        }
        cp.add_segment(va, vb[s], Fold::Mountain, "A-B" + S);
        if (!b90[s]) cp.add_segment(vb[s], ve[s], Fold::Mountain, "B" + S + "-E" + S);
        if (vgp[s] != ve[s]) {
            cp.add_segment(va, vgp[s], Fold::Valley, "A-GP" + S);
            cp.add_segment(vgp[s], ve[s], Fold::Valley, "GP" + S + "-E" + S);
        } else {
            cp.add_segment(va, ve[s], Fold::Valley, "A-E" + S);
        }
        if (vgp[s] != ve[s] || b90[s])
            cp.add_segment(vb[s], vgp[s], Fold::Valley, "B" + S + "-GP" + S);
        if (!b90[s] && vpp[s] != ve[s])
            cp.add_segment(vb[s], vpp[s], Fold::Valley, "B" + S + "-PP" + S);
    }
    cp.add_segment(vgp[0], vgp[1], Fold::Mountain, "GPL-GPR");
    cp.add_segment(vpp[0], vpp[1], Fold::Mountain, "PPL-PPR");
    cp.add_segment(ve[0], ve[1], Fold::Valley, "EL-ER");

    if (opts.sheet) {
        Rect bx = cp.bounds();
        double pleat = std::max(dist(fr.b_l, fr.c), dist(fr.b_r, fr.c)) / 2.0;
        double m = 1.5 * pleat;
        cp.sheet = Rect{{bx.lo.x - m, bx.lo.y - m}, {bx.hi.x + m, bx.hi.y + m}};
    }

    Pose p = pose ? *pose : canonical_pose(spec);
    cp.transform(p);
    auto ap = [&](Point2& pt) { pt = p.apply(pt); };
    ap(out.a);
    ap(out.b_l);
    ap(out.b_r);
    ap(out.c);
    ap(out.d);
    ap(out.e_l);
    ap(out.e_r);
    auto apo = [&](std::optional<Point2>& pt) {
        if (pt) pt = p.apply(*pt);
    };
    apo(out.g_l);
    apo(out.gp_l);
    apo(out.gp_r);
    apo(out.p_l);
    apo(out.p_r);
    apo(out.b_prime);
    return out;
}

NewGadgetCP insert_face(const NewGadgetCP& g, double width, const Tolerance& tol) {
    if (width < 0.0) throw DomainError("insert_face: negative width");
    if (width == 0.0) return g;
    return construct_new(g.spec, g.pose, g.opts, tol, g.inserted_width + width);
}

PleatCrossing reroute_pleats(const Pleat& left, const Pleat& right, double u_frac,
                             const Tolerance& tol) {
    if (!(u_frac > 0.0 && u_frac < 1.0))
        throw DomainError("reroute_pleats: u must lie strictly between s and s'");
    auto pv = intersect_params(left.ell.origin, left.ell.dir, right.ell.origin, right.ell.dir,
                               tol);
    if (!pv || pv->first <= tol.eps_len || pv->second <= tol.eps_len)
        throw DomainError("reroute_pleats: pleat mountains do not intersect ahead");
    Point2 P = left.ell.at(pv->first);

    auto foot = [&](const Ray2& m) {
        Vec2 w = P - m.origin;
        return m.origin + dot(w, m.dir) * m.dir;
    };
    Point2 Q = foot(left.m);
    Point2 Qp = foot(right.m);
    double qq = dist(Q, Qp);
    if (qq <= tol.eps_len) throw DomainError("reroute_pleats: pleats share a valley line");

    // Canonical frame: QQ' along +x, P above.
    Vec2 xhat = normalized(Qp - Q);
    Vec2 yhat = perp(xhat);
    Point2 origin = 0.5 * (Q + Qp);
    auto fx = [&](Point2 pt) { return Point2{dot(pt - origin, xhat), dot(pt - origin, yhat)}; };
    Point2 pf = fx(P);
    if (pf.y < 0.0) {
        yhat = -1.0 * yhat;
        pf = fx(P);
    }
    if (pf.x < -tol.eps_len) return reroute_pleats(right, left, 1.0 - u_frac, tol);

    double q = qq / 2.0;
    PleatCrossing out;
    out.p = P;
    out.q = Q;
    out.qp = Qp;
    if (pf.x < q - tol.eps_len)
        out.case_tag = 1;
    else if (pf.x <= q + tol.eps_len)
        out.case_tag = 2;
    else
        out.case_tag = 3;

    auto rr = intersect_lines(left.m.line(), right.m.line(), tol);
    if (!rr) throw ConstructionError("reroute_pleats: valley lines parallel");
    Point2 R = *rr;
    out.r = R;
    Vec2 down = -1.0 * yhat;
    double rx = dot(R - origin, xhat);

    auto vertical = [&](double x) { return Line::at(origin + x * xhat, down); };
    Line sline = vertical(rx - 2.0 * q);
    Line spline = vertical(rx + 2.0 * q);
    double ux = rx + 2.0 * q * (2.0 * u_frac - 1.0);
    Line tline = vertical((ux + rx - 2.0 * q) / 2.0);
    Line tpline = vertical((ux + rx + 2.0 * q) / 2.0);

    auto on_line = [&](const Ray2& m, const Line& l, const char* what) {
        auto v = intersect_lines(m.line(), l, tol);
        if (!v) throw ConstructionError(std::string("reroute_pleats: ") + what);
        return *v;
    };
    Point2 S = on_line(left.m, sline, "S not found");
    Point2 Sp = on_line(right.m, spline, "S' not found");
    Point2 T = on_line(left.m, tline, "T not found");
    Point2 Tp = on_line(right.m, tpline, "T' not found");
    out.s_pt = S;
    out.sp_pt = Sp;
    out.t_pt = T;
    out.tp_pt = Tp;
    out.s = Ray2{S, down};
    out.sp = Ray2{Sp, down};
    out.t = Ray2{T, down};
    out.tp = Ray2{Tp, down};
    out.r_ray = Ray2{R, down};

    // Widths of the outgoing pleats.
    double w1 = std::fabs(dot(T - S, xhat));
    double w2 = std::fabs(dot(Sp - Tp, xhat));
    out.width_sum = w1 + w2;

    // Sanity: the input m creases must reach S before their origins.
    for (int s = 0; s < 2; ++s) {
        const Ray2& m = s == 0 ? left.m : right.m;
        Point2 target = s == 0 ? S : Sp;
        if (dot(target - m.origin, m.dir) < tol.eps_len)
            throw ConstructionError("reroute_pleats: pleats cross too close to their origins");
    }

    CreasePattern& cp = out.cp;
    auto sheetv = [&](Point2 pt) {
        return cp.add_vertex(pt, {VertexClass::SheetBoundary, {}, {}, {}, {}});
    };
    auto interiorv = [&](Point2 pt) {
        return cp.add_vertex(pt, {VertexClass::Interior, {}, {}, {}, {}});
    };
    int vP = interiorv(P);
    int vS = interiorv(S);
    int vSp = interiorv(Sp);
    int vT = interiorv(T);
    int vTp = interiorv(Tp);
    int vLo = sheetv(left.ell.origin);
    int vRo = sheetv(right.ell.origin);
    int vLm = sheetv(left.m.origin);
    int vRm = sheetv(right.m.origin);

    cp.add_segment(vLo, vP, Fold::Mountain, "l");
    cp.add_segment(vRo, vP, Fold::Mountain, "l'");
    cp.add_segment(vLm, vS, Fold::Valley, "m.0");
    cp.add_segment(vS, vT, Fold::Valley, "m.ST");
    cp.add_segment(vRm, vSp, Fold::Valley, "m'.0");
    cp.add_segment(vSp, vTp, Fold::Valley, "m'.S'T'");
    cp.add_ray(vS, down, Fold::Mountain, "s");
    cp.add_ray(vSp, down, Fold::Mountain, "s'");
    cp.add_ray(vT, down, Fold::Valley, "t");
    cp.add_ray(vTp, down, Fold::Valley, "t'");
    cp.add_segment(vP, vT, Fold::Mountain, "P-T");
    cp.add_segment(vP, vTp, Fold::Mountain, "P-T'");
    cp.add_segment(vP, vS, Fold::Valley, "P-S");
    cp.add_segment(vP, vSp, Fold::Valley, "P-S'");
    cp.add_segment(vT, vTp, Fold::Valley, "T-T'");
    return out;
}

}  // namespace oriex
