#include "oriex/division.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "oriex/gadget_conv.hpp"

namespace oriex {

DivisionPlan DivisionPlan::of(std::vector<double> raw) {
    if (raw.empty()) throw DomainError("division plan needs at least one ratio");
    double sum = 0.0;
    for (double p : raw) {
        if (!(p > 0.0)) throw DomainError("division ratios must be positive");
        sum += p;
    }
    double d = static_cast<double>(raw.size());
    for (double& p : raw) p *= d / sum;
    return DivisionPlan{std::move(raw)};
}

DivisionPlan DivisionPlan::equal(int d) {
    if (d < 1) throw DomainError("division needs d >= 1");
    return DivisionPlan{std::vector<double>(d, 1.0)};
}

double DivisionPlan::q(int n) const {
    double s = 0.0;
    for (int k = 1; k <= n; ++k) s += p(k);
    return s;
}

bool exists_D(int n, const DivisionPlan& plan, double gamma) {
    if (n < 2 || n > plan.d()) return false;
    double rhs = 0.5 * plan.p(n) * (1.0 / std::cos(gamma / 2) - 1.0);
    return plan.q(n - 1) < rhs - 1e-9 * std::max(1.0, rhs);
}

bool exists_G(int n, const DivisionPlan& plan, double gamma, double beta_sigma) {
    if (n < 2 || n > plan.d()) return false;
    double phi = beta_sigma + gamma / 4 - pi / 2;
    if (phi <= 1e-12) return false;
    double rhs = (1.0 - 1.0 / (1.0 + std::tan(gamma / 4) * std::tan(phi))) * plan.p(n) /
                 std::cos(gamma / 2);
    return plan.q(n - 1) < rhs - 1e-9 * std::max(1.0, rhs);
}

int max_n_D(double gamma) {
    double rhs = 0.5 * (1.0 / std::cos(gamma / 2) - 1.0);
    int n = 1;
    while (static_cast<double>(n) < rhs - 1e-9 * std::max(1.0, rhs)) ++n;
    return n;  // largest level with existence in equal division
}

int max_n_G(double gamma) {
    double bound = 0.5 / std::cos(gamma / 2);
    int n = 1;
    while (static_cast<double>(n) < bound - 1e-9 * std::max(1.0, bound)) ++n;
    return n;
}

std::pair<double, double> af_lengths(int n, const DivisionPlan& plan, double gamma) {
    if (n < 1 || n > plan.d()) throw DomainError("af_lengths: level out of range");
    double c = std::cos(gamma / 2);
    return {0.5 * plan.p(n) * (1.0 / c - 1.0), 0.5 * plan.p(n) * (1.0 / c + 1.0)};
}

namespace {

struct Builder {
    CreasePattern cp;
    double eps;
    int vid(Point2 p) { return cp.add_vertex(p, {}, eps); }
    void info(int v, VertexInfo i) { cp.vinfo[v] = i; }
};

// Splits a segment crease at the given interior vertices (sorted along it).
void add_split_segment(Builder& b, int va, int vb, std::vector<int> mids, Fold f,
                       const std::string& label) {
    Point2 pa = b.cp.vertices[va];
    Vec2 d = normalized(b.cp.vertices[vb] - pa);
    std::sort(mids.begin(), mids.end(), [&](int x, int y) {
        return dot(b.cp.vertices[x] - pa, d) < dot(b.cp.vertices[y] - pa, d);
    });
    std::vector<int> chain{va};
    for (int m : mids)
        if (m != chain.back() && m != vb) chain.push_back(m);
    chain.push_back(vb);
    b.cp.add_chain(chain, f, label);
}

void finish(DividedGadgetCP& g, Builder& b, const std::optional<Pose>& pose,
            const GadgetOptions& opts, double pleat) {
    if (opts.sheet) {
        Rect r = b.cp.bounds();
        double m = 1.5 * pleat;
        b.cp.sheet = Rect{{r.lo.x - m, r.lo.y - m}, {r.hi.x + m, r.hi.y + m}};
    }
    Pose p = pose ? *pose : canonical_pose(g.spec);
    b.cp.transform(p);
    g.cp = std::move(b.cp);
    auto ap = [&](Point2& pt) { pt = p.apply(pt); };
    auto apo = [&](std::optional<Point2>& pt) {
        if (pt) pt = p.apply(*pt);
    };
    ap(g.a);
    ap(g.b_l);
    ap(g.b_r);
    ap(g.c);
    for (auto& lv : g.levels) {
        ap(lv.a_prev);
        ap(lv.a);
        ap(lv.b_l_prev);
        ap(lv.b_l);
        ap(lv.b_r_prev);
        ap(lv.b_r);
        ap(lv.e_l);
        ap(lv.e_r);
        ap(lv.f);
        apo(lv.dpt);
        apo(lv.dprime_prev);
        apo(lv.g_l);
        apo(lv.g_r);
        apo(lv.gp_l_prev);
        apo(lv.gp_r_prev);
        apo(lv.j_l);
        apo(lv.j_r);
        apo(lv.kk_l);
        apo(lv.kk_r);
        apo(lv.mm_l);
        apo(lv.mm_r);
        apo(lv.d_l);
        apo(lv.d_r);
    }
}

std::string lv(const std::string& base, int side, int n) {
    return base + (side == 0 ? "L" : "R") + "." + std::to_string(n);
}

}  // namespace

DividedGadgetCP construct_divided_new(const GadgetSpec& spec, const DivisionPlan& plan,
                                      const std::optional<Pose>& pose,
                                      const GadgetOptions& opts, const Tolerance& tol) {
    if (spec.delta_l > tol.eps_ang || spec.delta_r > tol.eps_ang)
        throw DomainError("division requires delta_l = delta_r = 0");
    auto viol = validate_new(spec, tol);
    if (!viol.empty()) {
        std::ostringstream os;
        os << "construct_divided_new:";
        for (auto& v : viol) os << " " << v << ";";
        throw DomainError(os.str());
    }
    const int d = plan.d();
    if (d == 1) {
        NewGadgetOptions nopts;
        nopts.include_jk = opts.include_jk;
        nopts.sheet = opts.sheet;
        NewGadgetCP base = construct_new(spec, pose, nopts, tol);
        DividedGadgetCP g;
        g.cp = base.cp;
        g.spec = spec;
        g.plan = plan;
        g.a = base.a;
        g.b_l = base.b_l;
        g.b_r = base.b_r;
        g.c = base.c;
        DivLevel L;
        L.a_prev = base.c;
        L.a = base.a;
        L.b_l_prev = base.c;
        L.b_l = base.b_l;
        L.b_r_prev = base.c;
        L.b_r = base.b_r;
        L.e_l = base.e_l;
        L.e_r = base.e_r;
        L.f = base.f;
        L.dpt = base.d;
        L.g_l = base.g_l;
        L.g_r = base.g_r;
        g.levels.push_back(L);
        return g;
    }

    Frame fr = make_frame(spec);
    double gam = fr.gamma;
    double u = spec.ridge_len / d;  // paper normalization ||AB|| = d
    Vec2 ac = normalized(fr.c - fr.a);
    double phi[2] = {spec.beta_l + gam / 4 - pi / 2, spec.beta_r + gam / 4 - pi / 2};
    bool eq_side[2] = {std::fabs(phi[0]) <= tol.eps_ang, std::fabs(phi[1]) <= tol.eps_ang};
    double bis_ang[2] = {gam / 4, 3 * gam / 4};
    Vec2 khat[2] = {fr.j_dir(0), fr.j_dir(1)};
    Vec2 lhat[2] = {fr.l_dir(0), fr.l_dir(1)};
    Vec2 kphat[2];
    for (int s = 0; s < 2; ++s)
        kphat[s] = reflect_dir(khat[s], Line::at({0, 0}, lhat[s]));

    std::vector<Point2> A(d + 1), BL(d + 1), BR(d + 1);
    for (int n = 0; n <= d; ++n) {
        double t = plan.q(n) / d;
        A[n] = fr.c + t * (fr.a - fr.c);
        BL[n] = fr.c + t * (fr.b_l - fr.c);
        BR[n] = fr.c + t * (fr.b_r - fr.c);
    }
    auto B = [&](int s, int n) { return s == 0 ? BL[n] : BR[n]; };

    std::vector<Point2> EL(d + 1), ER(d + 1), F(d + 1);
    for (int n = 1; n <= d; ++n) {
        for (int s = 0; s < 2; ++s) {
            auto e = intersect_lines(Line::at(A[n], dir_of(bis_ang[s])),
                                     perpendicular_bisector(B(s, n - 1), B(s, n)), tol);
            if (!e) throw ConstructionError("division: E not found");
            (s == 0 ? EL[n] : ER[n]) = *e;
        }
        auto f = intersect_lines(Line::at(fr.a, ac), Line::through(EL[n], ER[n]), tol);
        if (!f) throw ConstructionError("division: F not found");
        F[n] = *f;
    }

    std::vector<bool> hasD(d + 1, false);
    std::vector<Point2> D(d + 1), DP(d + 1);
    hasD[1] = true;
    D[1] = A[1] + plan.q(1) * u * ac;
    for (int n = 2; n <= d; ++n) {
        hasD[n] = dist(A[n], F[n]) > plan.q(n) * u * (1.0 + 1e-12);
        if (hasD[n]) {
            D[n] = A[n] + plan.q(n) * u * ac;
            DP[n - 1] = A[n - 1] - plan.q(n - 1) * u * ac;
        }
        if (hasD[n] != exists_D(n, plan, gam) && n >= 2) {
            // Keep the geometric answer; the formula test covers agreement.
        }
    }

    // Ear points per side and level.
    std::vector<std::array<bool, 2>> hasG(d + 1, {false, false});
    std::vector<std::array<Point2, 2>> G(d + 1), GP(d + 1), J(d + 1), KK(d + 1), MM(d + 1);
    std::vector<std::array<bool, 2>> hasM(d + 1, {false, false});
    for (int n = 1; n <= d; ++n) {
        for (int s = 0; s < 2; ++s) {
            Point2 e = s == 0 ? EL[n] : ER[n];
            Line bis = Line::at(A[n], dir_of(bis_ang[s]));
            double te = dot(e - A[n], bis.d);
            auto hit = intersect_params(B(s, n), kphat[s], A[n], bis.d, tol);
            bool has = false;
            Point2 gpt{};
            if (hit && hit->first > tol.eps_len &&
                hit->second > tol.eps_len && hit->second < te - tol.eps_len) {
                has = true;
                gpt = A[n] + hit->second * bis.d;
            }
            if (n == 1) {
                if (eq_side[s]) {
                    hasG[1][s] = false;  // G = E merged
                } else {
                    if (!has) throw ConstructionError("division: G^(1) missing");
                    hasG[1][s] = true;
                    G[1][s] = gpt;
                }
                continue;
            }
            hasG[n][s] = has && !eq_side[s];
            if (hasG[n][s]) {
                G[n][s] = gpt;
                // Partner G'^(n-1) on segment A^(n-1) E^(n) along k^(n-1).
                auto hp = intersect_params(B(s, n - 1), khat[s], A[n - 1],
                                           normalized(e - A[n - 1]), tol);
                if (!hp || hp->first < -tol.eps_len)
                    throw ConstructionError("division: G' missing while G exists");
                GP[n - 1][s] = A[n - 1] + hp->second * normalized(e - A[n - 1]);
            } else {
                Line m_line = perpendicular_bisector(B(s, n - 1), B(s, n));
                auto jj = intersect_lines(Line::at(B(s, n), kphat[s]), m_line, tol);
                if (!jj) throw ConstructionError("division: J not found");
                J[n][s] = *jj;
                auto j2 = intersect_lines(Line::at(B(s, n - 1), khat[s]), m_line, tol);
                if (!j2 || dist(*jj, *j2) > 1e-6 * std::max(1.0, spec.ridge_len))
                    throw ConstructionError("division: J mismatch between k and k'");
            }
        }
    }

    // Tongue points K (parallel transport of D^(1)E^(1)) and M (reflected k').
    for (int n = 2; n <= d; ++n) {
        for (int s = 0; s < 2; ++s) {
            Point2 e = s == 0 ? EL[n] : ER[n];
            Point2 e1 = s == 0 ? EL[1] : ER[1];
            Line eline = Line::through(EL[n], ER[n]);
            if (hasD[n]) {
                auto k1 = intersect_lines(Line::at(D[n], normalized(e1 - D[1])), eline, tol);
                if (!k1) throw ConstructionError("division: K not found");
                KK[n][s] = *k1;
            }
            if (hasD[n] != hasG[n][s]) {
                Line ae = Line::at(A[n], dir_of(bis_ang[s]));
                Vec2 refl = reflect_dir(kphat[s], ae);
                Point2 from = hasD[n] ? D[n] : G[n][s];
                if (!hasD[n]) {
                    // The reflected k' line passes through G^(n).
                } else {
                    Point2 img = reflect_point(B(s, n), ae);
                    if (dist(img, D[n]) > 1e-6 * std::max(1.0, spec.ridge_len))
                        throw ConstructionError("division: reflected ray misses D");
                }
                if (std::fabs(cross(refl, eline.d)) < 1e-9) {
                    MM[n][s] = e;  // degenerate: reflected line runs along E_L E_R
                } else {
                    auto mm = intersect_lines(Line::at(from, refl), eline, tol);
                    if (!mm) throw ConstructionError("division: M not found");
                    MM[n][s] = *mm;
                }
                hasM[n][s] = true;
            }
        }
    }

    DividedGadgetCP g;
    g.spec = spec;
    g.plan = plan;
    g.a = fr.a;
    g.b_l = fr.b_l;
    g.b_r = fr.b_r;
    g.c = fr.c;

    Builder b;
    b.eps = 1e-9 * std::max(1.0, spec.ridge_len);

    // Creases.
    int v_a = b.vid(fr.a);
    if (opts.include_jk) {
        b.cp.add_ray(v_a, fr.j_dir(0), Fold::Mountain, "jL");
        b.cp.add_ray(v_a, fr.j_dir(1), Fold::Mountain, "jR");
        b.cp.add_ray(b.vid(fr.b_l), khat[0], Fold::Valley, "kL");
        b.cp.add_ray(b.vid(fr.b_r), khat[1], Fold::Valley, "kR");
    }
    for (int n = 1; n <= d; ++n) {
        for (int s = 0; s < 2; ++s) {
            int va = b.vid(A[n]);
            int vb = b.vid(B(s, n));
            b.cp.add_segment(va, vb, Fold::Mountain, lv("l", s, n));
            b.cp.add_ray(vb, lhat[s], Fold::Mountain, lv("l+", s, n));
            // m^(n): valley ray from E, split at J when present.
            Point2 e = s == 0 ? EL[n] : ER[n];
            int ve = b.vid(e);
            if (!hasG[n][s] && n >= 2) {
                int vj = b.vid(J[n][s]);
                if (dot(J[n][s] - e, lhat[s]) > tol.eps_len) {
                    b.cp.add_segment(ve, vj, Fold::Valley, lv("m", s, n) + ".0");
                    b.cp.add_ray(vj, lhat[s], Fold::Valley, lv("m", s, n) + ".1");
                } else {
                    b.cp.add_ray(ve, lhat[s], Fold::Valley, lv("m", s, n));
                }
            } else {
                b.cp.add_ray(ve, lhat[s], Fold::Valley, lv("m", s, n));
            }
            // A^(n) E^(n) valley, split at G^(n).
            if (hasG[n][s]) {
                int vg = b.vid(G[n][s]);
                b.cp.add_segment(va, vg, Fold::Valley, lv("AE", s, n) + ".0");
                b.cp.add_segment(vg, ve, Fold::Valley, lv("AE", s, n) + ".1");
            } else {
                b.cp.add_segment(va, ve, Fold::Valley, lv("AE", s, n));
            }
        }
        // E-line with splits.
        {
            int vel = b.vid(EL[n]);
            int ver = b.vid(ER[n]);
            std::vector<int> mids;
            if (n >= 2) {
                if (hasD[n]) {
                    mids.push_back(b.vid(KK[n][0]));
                    mids.push_back(b.vid(KK[n][1]));
                } else {
                    mids.push_back(b.vid(F[n]));
                }
                for (int s = 0; s < 2; ++s)
                    if (hasM[n][s]) mids.push_back(b.vid(MM[n][s]));
            }
            add_split_segment(b, vel, ver, mids, Fold::Valley, "ELER." + std::to_string(n));
        }
    }
    // Level 1 tongue and ears.
    {
        int vd1 = b.vid(D[1]);
        b.cp.add_segment(b.vid(A[1]), vd1, Fold::Mountain, "AD.1");
        for (int s = 0; s < 2; ++s) {
            int ve = b.vid(s == 0 ? EL[1] : ER[1]);
            b.cp.add_segment(vd1, ve, Fold::Mountain, lv("DE", s, 1));
            if (hasG[1][s]) {
                int vg = b.vid(G[1][s]);
                b.cp.add_segment(b.vid(B(s, 1)), vg, Fold::Mountain, lv("BG", s, 1));
                b.cp.add_segment(vd1, vg, Fold::Valley, lv("DG", s, 1));
            } else {
                b.cp.add_segment(b.vid(B(s, 1)), ve, Fold::Mountain, lv("BE", s, 1));
            }
        }
    }
    // Levels 2..d.
    for (int n = 2; n <= d; ++n) {
        for (int s = 0; s < 2; ++s) {
            // A^(n-1) E^(n) mountain, split at G'^(n-1).
            int vap = b.vid(A[n - 1]);
            int ve = b.vid(s == 0 ? EL[n] : ER[n]);
            if (hasG[n][s]) {
                int vgp = b.vid(GP[n - 1][s]);
                b.cp.add_segment(vap, vgp, Fold::Mountain, lv("AupE", s, n) + ".0");
                b.cp.add_segment(vgp, ve, Fold::Mountain, lv("AupE", s, n) + ".1");
            } else {
                b.cp.add_segment(vap, ve, Fold::Mountain, lv("AupE", s, n));
            }
        }
        if (hasD[n]) {
            int vd = b.vid(D[n]);
            int vdp = b.vid(DP[n - 1]);
            b.cp.add_segment(b.vid(A[n]), vd, Fold::Mountain, "AD." + std::to_string(n));
            b.cp.add_segment(b.vid(A[n - 1]), vdp, Fold::Valley, "ADp." + std::to_string(n));
            for (int s = 0; s < 2; ++s) {
                b.cp.add_segment(vd, b.vid(KK[n][s]), Fold::Mountain, lv("DK", s, n));
                b.cp.add_segment(vdp, b.vid(KK[n][s]), Fold::Valley, lv("DpK", s, n));
            }
        } else {
            int vf = b.vid(F[n]);
            b.cp.add_segment(b.vid(A[n]), vf, Fold::Mountain, "AFhi." + std::to_string(n));
            b.cp.add_segment(b.vid(A[n - 1]), vf, Fold::Valley, "AFlo." + std::to_string(n));
        }
        for (int s = 0; s < 2; ++s) {
            if (hasG[n][s]) {
                int vg = b.vid(G[n][s]);
                int vgp = b.vid(GP[n - 1][s]);
                b.cp.add_segment(b.vid(B(s, n)), vg, Fold::Mountain, lv("BG", s, n));
                b.cp.add_segment(b.vid(B(s, n - 1)), vgp, Fold::Valley, lv("BGp", s, n));
                if (hasD[n]) {
                    b.cp.add_segment(b.vid(D[n]), vg, Fold::Valley, lv("DG", s, n));
                    b.cp.add_segment(b.vid(DP[n - 1]), vgp, Fold::Mountain, lv("DpGp", s, n));
                } else {
                    int vm = b.vid(MM[n][s]);
                    if (vm != vg) b.cp.add_segment(vg, vm, Fold::Valley, lv("GM", s, n));
                    if (vm != vgp) b.cp.add_segment(vgp, vm, Fold::Mountain, lv("GpM", s, n));
                }
            } else {
                int vj = b.vid(J[n][s]);
                b.cp.add_segment(b.vid(B(s, n)), vj, Fold::Mountain, lv("BJ", s, n));
                b.cp.add_segment(b.vid(B(s, n - 1)), vj, Fold::Valley, lv("BJp", s, n));
                if (hasD[n]) {
                    int vm = b.vid(MM[n][s]);
                    int vk = b.vid(KK[n][s]);
                    if (vm != vk) {
                        b.cp.add_segment(b.vid(D[n]), vm, Fold::Valley, lv("DM", s, n));
                        b.cp.add_segment(b.vid(DP[n - 1]), vm, Fold::Mountain, lv("DpM", s, n));
                    }
                }
            }
        }
    }

    // Vertex classes.
    for (int n = 1; n <= d; ++n) {
        DivLevel L;
        L.a_prev = A[n - 1];
        L.a = A[n];
        L.b_l_prev = BL[n - 1];
        L.b_l = BL[n];
        L.b_r_prev = BR[n - 1];
        L.b_r = BR[n];
        L.e_l = EL[n];
        L.e_r = ER[n];
        L.f = F[n];
        if (hasD[n]) L.dpt = D[n];
        if (n >= 2 && hasD[n]) L.dprime_prev = DP[n - 1];
        if (hasG[n][0]) L.g_l = G[n][0];
        if (hasG[n][1]) L.g_r = G[n][1];
        if (n >= 2 && hasG[n][0]) L.gp_l_prev = GP[n - 1][0];
        if (n >= 2 && hasG[n][1]) L.gp_r_prev = GP[n - 1][1];
        if (n >= 2 && !hasG[n][0]) L.j_l = J[n][0];
        if (n >= 2 && !hasG[n][1]) L.j_r = J[n][1];
        if (n >= 2 && hasD[n]) {
            L.kk_l = KK[n][0];
            L.kk_r = KK[n][1];
        }
        if (hasM[n][0]) L.mm_l = MM[n][0];
        if (hasM[n][1]) L.mm_r = MM[n][1];
        g.levels.push_back(L);
    }

    auto interior = [&](Point2 p) {
        b.info(b.vid(p), VertexInfo{VertexClass::Interior, {}, {}, {}, {}});
    };
    auto boundary0 = [&](Point2 p, Vec2 d1, Vec2 d2, Vec2 inner) {
        auto [x, y] = order_delims(d1, d2, inner);
        b.info(b.vid(p), VertexInfo{VertexClass::FoldedBoundary, 0.0, x, y, {}});
    };
    b.info(v_a, VertexInfo{VertexClass::FoldedBoundary, {}, {}, {}, {}});
    for (int s = 0; s < 2; ++s) {
        Point2 bs = B(s, d);
        Point2 up = hasG[d][s] ? G[d][s] : J[d][s];
        boundary0(bs, khat[s], normalized(up - bs), lhat[s]);
    }
    for (int n = 1; n <= d; ++n) {
        if (n < d) {
            interior(A[n]);
            interior(BL[n]);
            interior(BR[n]);
        }
        for (int s = 0; s < 2; ++s) {
            Point2 e = s == 0 ? EL[n] : ER[n];
            if (n == 1 && eq_side[s]) {
                // E = G merged on the folded boundary.
                boundary0(e, normalized(B(s, 1) - e), normalized(D[1] - e), lhat[s]);
            } else {
                interior(e);
            }
            if (n >= 2 && !hasG[n][s]) interior(J[n][s]);
            if (n >= 2 && hasD[n]) interior(KK[n][s]);
            if (hasM[n][s] && dist(MM[n][s], e) > b.eps) interior(MM[n][s]);
            if (hasG[n][s]) {
                Point2 gp = G[n][s];
                Vec2 toB = normalized(B(s, n) - gp);
                Vec2 toD = hasD[n] ? normalized(D[n] - gp) : normalized(MM[n][s] - gp);
                Vec2 inner = normalized(e - gp);
                if (n == d)
                    boundary0(gp, toB, toD, inner);
                else
                    interior(gp);
                Point2 gpp = GP[n - 1][s];
                if (n >= 2) {
                    Vec2 pB = normalized(B(s, n - 1) - gpp);
                    Vec2 pD = hasD[n] ? normalized(DP[n - 1] - gpp) : normalized(MM[n][s] - gpp);
                    Vec2 pinner = normalized(e - gpp);
                    if (n == d)
                        boundary0(gpp, pB, pD, pinner);
                    else
                        interior(gpp);
                }
            }
        }
        if (n >= 2 && !hasD[n]) interior(F[n]);
        if (hasD[n]) {
            Vec2 dl = hasG[n][0] ? normalized(G[n][0] - D[n])
                                 : (hasM[n][0] ? normalized(MM[n][0] - D[n])
                                               : normalized(EL[n] - D[n]));
            Vec2 dr = hasG[n][1] ? normalized(G[n][1] - D[n])
                                 : (hasM[n][1] ? normalized(MM[n][1] - D[n])
                                               : normalized(ER[n] - D[n]));
            auto [x, y] = order_delims(dl, dr, ac);
            b.info(b.vid(D[n]),
                   VertexInfo{VertexClass::FoldedBoundary, spec.alpha, x, y, ac});
            if (n >= 2) {
                Point2 dp = DP[n - 1];
                Vec2 pl = hasG[n][0] ? normalized(GP[n - 1][0] - dp)
                                     : normalized(MM[n][0] - dp);
                Vec2 pr = hasG[n][1] ? normalized(GP[n - 1][1] - dp)
                                     : normalized(MM[n][1] - dp);
                auto [px, py] = order_delims(pl, pr, -1.0 * ac);
                b.info(b.vid(dp),
                       VertexInfo{VertexClass::FoldedBoundary, spec.alpha, px, py, -1.0 * ac});
            }
        }
    }

    double pleat = std::max(dist(fr.b_l, fr.c), dist(fr.b_r, fr.c)) / 2.0;
    finish(g, b, pose, opts, pleat);
    return g;
}

DividedGadgetCP construct_divided_conventional(const GadgetSpec& spec, const DivisionPlan& plan,
                                               const std::optional<Pose>& pose,
                                               const GadgetOptions& opts,
                                               const Tolerance& tol) {
    if (spec.delta_l > tol.eps_ang || spec.delta_r > tol.eps_ang)
        throw DomainError("division requires delta_l = delta_r = 0");
    auto viol = validate_conv(spec, tol);
    if (!viol.empty()) {
        std::ostringstream os;
        os << "construct_divided_conventional:";
        for (auto& v : viol) os << " " << v << ";";
        throw DomainError(os.str());
    }
    const int d = plan.d();
    if (d == 1) {
        ConvGadgetCP base = construct_conventional(spec, pose, opts, tol);
        DividedGadgetCP g;
        g.cp = base.cp;
        g.spec = spec;
        g.plan = plan;
        g.conventional = true;
        g.a = base.a;
        g.b_l = base.b_l;
        g.b_r = base.b_r;
        g.c = base.c;
        DivLevel L;
        L.a_prev = base.c;
        L.a = base.a;
        L.b_l_prev = base.c;
        L.b_l = base.b_l;
        L.b_r_prev = base.c;
        L.b_r = base.b_r;
        L.d_l = base.d_l;
        L.d_r = base.d_r;
        g.levels.push_back(L);
        return g;
    }

    Frame fr = make_frame(spec);
    Vec2 khat[2] = {fr.j_dir(0), fr.j_dir(1)};
    Vec2 lhat[2] = {fr.l_dir(0), fr.l_dir(1)};
    Vec2 kphat[2];
    for (int s = 0; s < 2; ++s)
        kphat[s] = reflect_dir(khat[s], Line::at({0, 0}, lhat[s]));

    std::vector<Point2> A(d + 1), BL(d + 1), BR(d + 1);
    for (int n = 0; n <= d; ++n) {
        double t = plan.q(n) / d;
        A[n] = fr.c + t * (fr.a - fr.c);
        BL[n] = fr.c + t * (fr.b_l - fr.c);
        BR[n] = fr.c + t * (fr.b_r - fr.c);
    }
    auto B = [&](int s, int n) { return s == 0 ? BL[n] : BR[n]; };

    std::vector<std::array<Point2, 2>> DD(d + 1), J(d + 1);
    for (int s = 0; s < 2; ++s) {
        auto d1 = intersect_lines(perpendicular_bisector(B(s, 0), B(s, 1)),
                                  Line::at(B(s, 1), kphat[s]), tol);
        if (!d1) throw ConstructionError("conv division: D^(1) not found");
        DD[1][s] = *d1;
        for (int n = 2; n <= d; ++n) {
            auto dn = intersect_lines(perpendicular_bisector(B(s, n - 1), B(s, n)),
                                      Line::at(A[n], normalized(DD[1][s] - A[1])), tol);
            if (!dn) throw ConstructionError("conv division: D^(n) not found");
            DD[n][s] = *dn;
            auto jn = intersect_lines(Line::at(B(s, n - 1), khat[s]),
                                      Line::at(B(s, n), kphat[s]), tol);
            if (!jn) {
                // k and k' collinear (beta = pi/2): J on the bisector line.
                jn = intersect_lines(perpendicular_bisector(B(s, n - 1), B(s, n)),
                                     Line::at(B(s, n - 1), khat[s]), tol);
            }
            if (!jn) throw ConstructionError("conv division: J not found");
            J[n][s] = *jn;
        }
    }

    DividedGadgetCP g;
    g.spec = spec;
    g.plan = plan;
    g.conventional = true;
    g.a = fr.a;
    g.b_l = fr.b_l;
    g.b_r = fr.b_r;
    g.c = fr.c;

    Builder b;
    b.eps = 1e-9 * std::max(1.0, spec.ridge_len);
    int v_a = b.vid(fr.a);
    if (opts.include_jk) {
        b.cp.add_ray(v_a, khat[0], Fold::Mountain, "jL");
        b.cp.add_ray(v_a, khat[1], Fold::Mountain, "jR");
        b.cp.add_ray(b.vid(fr.b_l), khat[0], Fold::Valley, "kL");
        b.cp.add_ray(b.vid(fr.b_r), khat[1], Fold::Valley, "kR");
    }
    for (int n = 1; n <= d; ++n) {
        int va = b.vid(A[n]);
        for (int s = 0; s < 2; ++s) {
            int vb = b.vid(B(s, n));
            b.cp.add_segment(va, vb, Fold::Mountain, lv("l", s, n));
            b.cp.add_ray(vb, lhat[s], Fold::Mountain, lv("l+", s, n));
            int vd = b.vid(DD[n][s]);
            b.cp.add_segment(va, vd, Fold::Valley, lv("AD", s, n));
            if (n >= 2) {
                b.cp.add_segment(b.vid(A[n - 1]), vd, Fold::Mountain, lv("AupD", s, n));
                int vj = b.vid(J[n][s]);
                b.cp.add_segment(b.vid(B(s, n)), vj, Fold::Mountain, lv("BJ", s, n));
                b.cp.add_segment(b.vid(B(s, n - 1)), vj, Fold::Valley, lv("BJp", s, n));
                if (dot(J[n][s] - DD[n][s], lhat[s]) > tol.eps_len) {
                    b.cp.add_segment(vd, vj, Fold::Valley, lv("m", s, n) + ".0");
                    b.cp.add_ray(vj, lhat[s], Fold::Valley, lv("m", s, n) + ".1");
                } else {
                    b.cp.add_ray(vd, lhat[s], Fold::Valley, lv("m", s, n));
                }
            } else {
                b.cp.add_segment(b.vid(B(s, 1)), vd, Fold::Mountain, lv("BD", s, 1));
                b.cp.add_ray(vd, lhat[s], Fold::Valley, lv("m", s, 1));
            }
        }
        b.cp.add_segment(b.vid(DD[n][0]), b.vid(DD[n][1]), Fold::Valley,
                         "DLDR." + std::to_string(n));
    }

    b.info(v_a, VertexInfo{VertexClass::FoldedBoundary, {}, {}, {}, {}});
    for (int s = 0; s < 2; ++s) {
        Point2 bs = B(s, d);
        Point2 up = d >= 2 ? J[d][s] : DD[1][s];
        auto [x, y] = order_delims(khat[s], normalized(up - bs), lhat[s]);
        b.info(b.vid(bs), VertexInfo{VertexClass::FoldedBoundary, 0.0, x, y, {}});
    }
    for (int n = 1; n <= d; ++n) {
        if (n < d) {
            b.info(b.vid(A[n]), VertexInfo{VertexClass::FoldedBoundary, {}, {}, {}, {}});
            b.info(b.vid(BL[n]), VertexInfo{VertexClass::Interior, {}, {}, {}, {}});
            b.info(b.vid(BR[n]), VertexInfo{VertexClass::Interior, {}, {}, {}, {}});
        }
        for (int s = 0; s < 2; ++s) {
            b.info(b.vid(DD[n][s]), VertexInfo{VertexClass::FoldedBoundary, {}, {}, {}, {}});
            if (n >= 2)
                b.info(b.vid(J[n][s]), VertexInfo{VertexClass::Interior, {}, {}, {}, {}});
        }
        DivLevel L;
        L.a_prev = A[n - 1];
        L.a = A[n];
        L.b_l_prev = BL[n - 1];
        L.b_l = BL[n];
        L.b_r_prev = BR[n - 1];
        L.b_r = BR[n];
        L.d_l = DD[n][0];
        L.d_r = DD[n][1];
        if (n >= 2) {
            L.j_l = J[n][0];
            L.j_r = J[n][1];
        }
        g.levels.push_back(L);
    }

    double pleat = std::max(dist(fr.b_l, fr.c), dist(fr.b_r, fr.c)) / 2.0;
    finish(g, b, pose, opts, pleat);
    return g;
}

DividedGadgetCP layer_exchange_option(const DividedGadgetCP& g, int n, const Tolerance&) {
    if (g.conventional) throw DomainError("layer exchange applies to the new-gadget division");
    if (n < 2 || n > g.plan.d()) throw DomainError("layer exchange: level out of range");
    if (g.levels[n - 1].dpt)
        throw DomainError("layer exchange not applicable: D^(n) exists at this level");
    DividedGadgetCP out = g;
    std::string up0 = lv("AupE", 0, n);
    std::string up1 = lv("AupE", 1, n);
    std::string el = "ELER." + std::to_string(n);
    bool touched = false;
    for (auto& c : out.cp.creases) {
        bool is_up = c.label == up0 || c.label == up1 ||
                     c.label.rfind(up0 + ".", 0) == 0 || c.label.rfind(up1 + ".", 0) == 0;
        bool is_el = c.label == el || c.label.rfind(el + ".", 0) == 0;
        if (is_up || is_el) {
            c.fold = c.fold == Fold::Mountain ? Fold::Valley : Fold::Mountain;
            touched = true;
        }
    }
    if (!touched) throw ConstructionError("layer exchange: no creases found for level");
    return out;
}

}  // namespace oriex
