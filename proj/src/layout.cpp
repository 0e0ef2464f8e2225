#include "oriex/layout.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace oriex {

namespace {

// Canonicalizes the base polygon: centroid at the origin, B_1 B_2 along +x.
PolyhedronSpec canonical_base(PolyhedronSpec s) {
    Point2 cen{0, 0};
    for (auto& p : s.base) cen = cen + (1.0 / s.n()) * p;
    double rot = -angle_of(s.base[1] - s.base[0]);
    for (auto& p : s.base) p = rotated(p - cen, rot);
    return s;
}

void add_edge_creases(Development& dev, double merge_eps, const Tolerance& tol) {
    const PolyhedronSpec& s = dev.spec;
    CreasePattern& cp = dev.cp;
    for (int i = 0; i < s.n(); ++i) {
        int j = s.wrap(i + 1);
        if (dist(dev.top[i], dev.top[j]) > tol.eps_len) {
            int u = cp.add_vertex(dev.top[i], {VertexClass::FoldedBoundary, {}, {}, {}, {}},
                                  merge_eps);
            int v = cp.add_vertex(dev.top[j], {VertexClass::FoldedBoundary, {}, {}, {}, {}},
                                  merge_eps);
            cp.add_segment(u, v, Fold::Mountain, "top" + std::to_string(i));
        }
        int u = cp.add_vertex(dev.b_img_r[i], {VertexClass::FoldedBoundary, {}, {}, {}, {}},
                              merge_eps);
        int v = cp.add_vertex(dev.b_img_l[j], {VertexClass::FoldedBoundary, {}, {}, {}, {}},
                              merge_eps);
        cp.add_segment(u, v, Fold::Valley, "base" + std::to_string(i));
    }
}

void set_sheet(Development& dev, double h) {
    const PolyhedronSpec& s = dev.spec;
    double pleat = 0.0;
    for (int i = 0; i < s.n(); ++i) {
        GadgetSpec g = s.gadget(i);
        g.ridge_len = h / s.lambda(i);
        Frame fr = make_frame(g);
        pleat = std::max({pleat, dist(fr.b_l, fr.c) / 2.0, dist(fr.b_r, fr.c) / 2.0});
    }
    Rect b = dev.cp.bounds();
    double m = 1.5 * pleat;
    dev.cp.sheet = Rect{{b.lo.x - m, b.lo.y - m}, {b.hi.x + m, b.hi.y + m}};
}

void crossing_warnings(Development& dev, const Tolerance& tol) {
    const PolyhedronSpec& s = dev.spec;
    for (int i = 0; i < s.n(); ++i) {
        double sum = s.ang(i).beta_r - s.ang(i).delta_r + s.ang(s.wrap(i + 1)).beta_l -
                     s.ang(s.wrap(i + 1)).delta_l;
        if (sum < pi / 2 - tol.eps_ang)
            dev.warnings.push_back("outgoing pleats of ridges " + std::to_string(i) + " and " +
                                   std::to_string(s.wrap(i + 1)) +
                                   " intersect; consider rerouting");
    }
}

}  // namespace

Development develop(const PolyhedronSpec& spec_in, const LayoutOptions& opts,
                    const Tolerance& tol) {
    auto viol = validate_polyhedron(spec_in, tol);
    if (!viol.empty()) {
        std::ostringstream os;
        os << "develop:";
        for (auto& v : viol) os << " " << v << ";";
        throw DomainError(os.str());
    }

    Development dev;
    dev.spec = canonical_base(spec_in);
    const PolyhedronSpec& s = dev.spec;
    const int n = s.n();

    // Planar-trapezoid compatibility: both ridges of a side face climb to the
    // shared apex of the face plane at the same rate.
    for (int i = 0; i < n; ++i) {
        int j = s.wrap(i + 1);
        double lhs = s.lambda(i) * std::sin(s.ang(j).beta_l);
        double rhs = s.lambda(j) * std::sin(s.ang(i).beta_r);
        if (std::fabs(lhs - rhs) > 1e-7 * std::max(1.0, std::fabs(lhs)))
            throw DomainError(
                "develop: ridge angles at edge " + std::to_string(i) +
                " do not assemble into a planar side face (lambda_i sin beta_(i+1,L) != "
                "lambda_(i+1) sin beta_(i,R))");
    }

    for (int i = 0; i < n; ++i) {
        GadgetSpec g = s.gadget(i);
        Family f = opts.family;
        if (f == Family::Auto)
            f = validate_new(g, tol).empty() ? Family::New : Family::Conventional;
        if (f == Family::New && !validate_new(g, tol).empty())
            throw DomainError("develop: ridge " + std::to_string(i) +
                              " invalid for the new gadget: " + validate_new(g, tol)[0]);
        if (f == Family::Conventional && !validate_conv(g, tol).empty())
            throw DomainError("develop: ridge " + std::to_string(i) +
                              " invalid for the conventional gadget: " +
                              validate_conv(g, tol)[0]);
        dev.family.push_back(f);
    }

    dev.report = solve_heights(s);
    double h = s.height;
    if (h <= 0.0) {
        h = dev.report.h_new;
        for (Family f : dev.family)
            if (f == Family::Conventional) h = std::min(h, dev.report.h_conv);
    }
    dev.height = h;
    if (h > dev.report.h_max * (1 + 1e-12))
        throw InfeasibleError("develop: height exceeds h_max");

    // Per-edge interference; with divisions only the lowest gadget occupies
    // the base edge.
    double level1 = opts.plan ? opts.plan->p(1) / opts.plan->d() : 1.0;
    for (int i = 0; i < n; ++i) {
        int j = s.wrap(i + 1);
        bool conv_i = dev.family[i] == Family::Conventional;
        bool conv_j = dev.family[j] == Family::Conventional;
        double ki = conv_i ? kappa_conv_vertex(s, i, 1)
                           : level1 * std::min(kappa_in_vertex(s, i, 1),
                                               kappa_out_vertex(s, i, 1));
        double kj = conv_j ? kappa_conv_vertex(s, j, 0)
                           : level1 * std::min(kappa_in_vertex(s, j, 0),
                                               kappa_out_vertex(s, j, 0));
        double k;
        if (!conv_i && !conv_j)
            k = level1 * kappa_edge_new(s, i);
        else
            k = ki + kj;
        if (h * k > s.edge_len(i) * (1 + 1e-9) + 10 * tol.eps_len) {
            std::ostringstream os;
            os << "develop: height " << h << " infeasible, edge " << i << " needs " << h * k
               << " > " << s.edge_len(i);
            throw InfeasibleError(os.str());
        }
        if (std::fabs(h * k - s.edge_len(i)) <= 1e-9 * std::max(1.0, s.edge_len(i)))
            dev.warnings.push_back("edge " + std::to_string(i) + " exactly saturated");
    }

    // Top polygon from the folded ridge direction.
    for (int i = 0; i < n; ++i) {
        double a = s.alpha(i), bl = s.ang(i).beta_l, br = s.ang(i).beta_r;
        double x = std::cos(br);
        double y = (std::cos(bl) - std::cos(a) * std::cos(br)) / std::sin(a);
        Vec2 e1 = normalized(s.b(i + 1) - s.b(i));
        Vec2 e2 = perp(e1);
        dev.top.push_back(s.b(i) - (h / s.lambda(i)) * (x * e1 + y * e2));
    }
    for (int i = 0; i < n; ++i) {
        Vec2 te = dev.top[s.wrap(i + 1)] - dev.top[i];
        if (norm(te) > 1e-7 &&
            std::fabs(cross(normalized(te), normalized(s.b(i + 1) - s.b(i)))) > 1e-7)
            throw ConstructionError("develop: top edge not parallel to base edge " +
                                    std::to_string(i));
    }

    // Developed B images around each top vertex.
    for (int i = 0; i < n; ++i) {
        double ridge = h / s.lambda(i);
        Point2 a = dev.top[i];
        Point2 prev = dev.top[s.wrap(i - 1)];
        Point2 next = dev.top[s.wrap(i + 1)];
        Vec2 dprev = dist(prev, a) > 1e-9 ? normalized(prev - a)
                                          : normalized(s.b(i - 1) - s.b(i));
        Vec2 dnext = dist(next, a) > 1e-9 ? normalized(next - a)
                                          : normalized(s.b(i + 1) - s.b(i));
        dev.b_img_l.push_back(a + ridge * rotated(dprev, s.ang(i).beta_l));
        dev.b_img_r.push_back(a + ridge * rotated(dnext, -s.ang(i).beta_r));
    }
    for (int i = 0; i < n; ++i) {
        double dl = dist(dev.b_img_r[i], dev.b_img_l[s.wrap(i + 1)]);
        if (std::fabs(dl - s.edge_len(i)) > 1e-6 * std::max(1.0, s.edge_len(i)))
            throw ConstructionError("develop: bottom edge length mismatch at edge " +
                                    std::to_string(i));
    }

    double merge_eps = 1e-9 * std::max(1.0, s.edge_len(0));
    GadgetOptions gopts;
    gopts.include_jk = false;
    gopts.sheet = false;
    for (int i = 0; i < n; ++i) {
        GadgetSpec g = s.gadget(i);
        g.ridge_len = h / s.lambda(i);
        Pose pose;
        pose.rot = angle_of(dev.b_img_l[i] - dev.top[i]);
        pose.shift = dev.top[i];
        if (dev.family[i] == Family::Conventional) {
            if (opts.plan && opts.plan->d() > 1)
                dev.cp.merge(construct_divided_conventional(g, *opts.plan, pose, gopts, tol).cp,
                             merge_eps);
            else
                dev.cp.merge(construct_conventional(g, pose, gopts, tol).cp, merge_eps);
        } else if (opts.plan && opts.plan->d() > 1) {
            dev.cp.merge(construct_divided_new(g, *opts.plan, pose, gopts, tol).cp, merge_eps);
        } else {
            NewGadgetOptions nopts;
            nopts.include_jk = false;
            nopts.sheet = false;
            nopts.variant_b = opts.variant_b;
            dev.cp.merge(construct_new(g, pose, nopts, tol).cp, merge_eps);
        }
    }

    add_edge_creases(dev, merge_eps, tol);
    crossing_warnings(dev, tol);
    set_sheet(dev, h);
    return dev;
}

Development develop_inserted_prism(const PolyhedronSpec& spec_in,
                                   const std::vector<double>& widths, const Tolerance& tol) {
    auto viol = validate_polyhedron(spec_in, tol);
    if (!viol.empty()) throw DomainError("develop_inserted_prism: invalid spec");
    if (!spec_in.is_prism(tol))
        throw DomainError("develop_inserted_prism: face insertion layout needs a prism");
    if (static_cast<int>(widths.size()) != spec_in.n())
        throw DomainError("develop_inserted_prism: one width per ridge required");
    for (double w : widths)
        if (w < 0.0) throw DomainError("develop_inserted_prism: negative width");

    Development dev;
    dev.spec = canonical_base(spec_in);
    const PolyhedronSpec& s = dev.spec;
    const int n = s.n();
    dev.report = solve_heights(s);
    double h = s.height > 0.0 ? s.height : dev.report.h_new;
    dev.height = h;
    for (int i = 0; i < n; ++i) {
        dev.family.push_back(Family::New);
        if (h * kappa_edge_new(s, i) > s.edge_len(i) * (1 + 1e-9))
            throw InfeasibleError("develop_inserted_prism: height infeasible at edge " +
                                  std::to_string(i));
    }

    // Closure of the widened footprint.
    Vec2 closure{0, 0};
    std::vector<Vec2> that(n);
    for (int i = 0; i < n; ++i) {
        Vec2 eprev = normalized(s.b(i) - s.b(i - 1));
        Vec2 enext = normalized(s.b(i + 1) - s.b(i));
        that[i] = normalized(eprev + enext);
        closure = closure + widths[i] * that[i];
    }
    if (norm(closure) > 1e-9 * std::max(1.0, s.edge_len(0)))
        throw InfeasibleError("develop_inserted_prism: insertion widths do not close");

    // Corner pairs of the widened top polygon (prism: top congruent to base).
    std::vector<Point2> am(n), ap(n);
    for (int i = 0; i < n; ++i) {
        am[i] = s.b(i) - 0.5 * widths[i] * that[i];
        ap[i] = s.b(i) + 0.5 * widths[i] * that[i];
    }
    // Walk consistency: edge i from ap[i] to am[i+1] stays parallel with the
    // base edge but may shift; rebuild by walking to keep edge lengths exact.
    {
        std::vector<Point2> wm(n), wp(n);
        wm[0] = am[0];
        wp[0] = wm[0] + widths[0] * that[0];
        for (int i = 0; i < n - 1; ++i) {
            Vec2 e = normalized(s.b(i + 1) - s.b(i));
            wm[i + 1] = wp[i] + s.edge_len(i) * e;
            wp[i + 1] = wm[i + 1] + widths[i + 1] * that[i + 1];
        }
        am = wm;
        ap = wp;
        Point2 cen{0, 0};
        for (int i = 0; i < n; ++i) cen = cen + (0.5 / n) * (am[i] + ap[i]);
        for (int i = 0; i < n; ++i) {
            am[i] = am[i] - cen;
            ap[i] = ap[i] - cen;
        }
    }

    double merge_eps = 1e-9 * std::max(1.0, s.edge_len(0));
    NewGadgetOptions gopts;
    gopts.include_jk = false;
    gopts.sheet = false;
    std::vector<NewGadgetCP> gs;
    for (int i = 0; i < n; ++i) {
        GadgetSpec g = s.gadget(i);
        g.ridge_len = h;  // prism: lambda = 1
        Vec2 dprev = normalized(ap[s.wrap(i - 1)] - am[i]);
        Pose pose;
        pose.rot = angle_of(rotated(dprev, s.ang(i).beta_l));
        pose.shift = am[i];
        NewGadgetCP ng = construct_new(g, pose, gopts, tol, widths[i]);
        if (dist(ng.a2, ap[i]) > 1e-6 * std::max(1.0, h))
            throw ConstructionError("develop_inserted_prism: split corner mismatch at ridge " +
                                    std::to_string(i));
        dev.cp.merge(ng.cp, merge_eps);
        gs.push_back(std::move(ng));
        dev.top.push_back(am[i]);
        dev.b_img_l.push_back(gs[i].b_l);
        dev.b_img_r.push_back(gs[i].b_r);
    }
    for (int i = 0; i < n; ++i) {
        int j = s.wrap(i + 1);
        int u = dev.cp.add_vertex(ap[i], {VertexClass::FoldedBoundary, {}, {}, {}, {}},
                                  merge_eps);
        int v = dev.cp.add_vertex(am[j], {VertexClass::FoldedBoundary, {}, {}, {}, {}},
                                  merge_eps);
        dev.cp.add_segment(u, v, Fold::Mountain, "top" + std::to_string(i));
        int bu = dev.cp.add_vertex(gs[i].b_r, {VertexClass::FoldedBoundary, {}, {}, {}, {}},
                                   merge_eps);
        int bv = dev.cp.add_vertex(gs[j].b_l, {VertexClass::FoldedBoundary, {}, {}, {}, {}},
                                   merge_eps);
        dev.cp.add_segment(bu, bv, Fold::Valley, "base" + std::to_string(i));
    }
    crossing_warnings(dev, tol);
    set_sheet(dev, h);
    return dev;
}

}  // namespace oriex
