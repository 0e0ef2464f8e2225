#include "oriex/gadget.hpp"

#include <cmath>
#include <sstream>

namespace oriex {

GammaSplit gamma_split(double gamma, double delta_l, double delta_r, const Tolerance& tol) {
    if (!(gamma > tol.eps_ang) || !(gamma < pi - tol.eps_ang))
        throw DomainError("gamma_split: gamma outside (0, pi)");
    if (delta_l < -tol.eps_ang || delta_r < -tol.eps_ang)
        throw DomainError("gamma_split: negative delta");
    if (delta_l >= pi / 2 || delta_r >= pi / 2)
        throw DomainError("gamma_split: delta >= pi/2");
    if (!(gamma + delta_l + delta_r < pi - tol.eps_ang))
        throw DomainError("gamma_split: gamma + delta_l + delta_r >= pi");
    double tl = std::tan(delta_l), tr = std::tan(delta_r);
    double sg = std::sin(gamma), cg = std::cos(gamma);
    GammaSplit out;
    out.gamma_l = std::atan((1.0 - cg + sg * tr) / (sg + cg * tr + tl));
    out.gamma_r = std::atan((1.0 - cg + sg * tl) / (sg + cg * tl + tr));
    return out;
}

double lambda_height(double alpha, double beta_l, double beta_r) {
    double sa = std::sin(alpha);
    if (std::fabs(sa) < 1e-15) throw DomainError("lambda: sin(alpha) = 0");
    double cl = std::cos(beta_l), cr = std::cos(beta_r);
    double rad = 1.0 - (cl * cl + cr * cr - 2.0 * std::cos(alpha) * cl * cr) / (sa * sa);
    if (rad < -1e-12) throw DomainError("lambda: invalid angle triple");
    return std::sqrt(std::max(0.0, rad));
}

double lambda_oracle(double alpha, double beta_l, double beta_r) {
    // u_R along +x; all rim vectors unit length.
    double x = std::cos(beta_r);
    double y = (std::cos(beta_l) - std::cos(alpha) * std::cos(beta_r)) / std::sin(alpha);
    double z2 = 1.0 - x * x - y * y;
    if (z2 < -1e-12) throw DomainError("lambda_oracle: invalid angle triple");
    return std::sqrt(std::max(0.0, z2));
}

namespace {

void check_strict(std::vector<std::string>& out, bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
}

}  // namespace

std::vector<std::string> validate_conv(const GadgetSpec& s, const Tolerance& tol) {
    std::vector<std::string> out;
    double a = s.alpha, bl = s.beta_l, br = s.beta_r;
    double e = tol.eps_ang;
    if (s.ridge_len <= 0.0) out.push_back("ridge length must be positive");
    if (std::fabs(s.delta_l) > e || std::fabs(s.delta_r) > e)
        out.push_back("conventional gadget requires delta_l = delta_r = 0");
    check_strict(out, a < bl + br - e, "(i) alpha < beta_l + beta_r fails");
    check_strict(out, bl < a + br - e, "(i) beta_l < alpha + beta_r fails");
    check_strict(out, br < a + bl - e, "(i) beta_r < alpha + beta_l fails");
    check_strict(out, a + bl + br < 2.0 * pi - e, "(ii) alpha + beta_l + beta_r < 2pi fails");
    check_strict(out, a + bl + br > pi + e, "(iii) alpha + beta_l + beta_r > pi fails");
    // Equivalent gamma-form conditions; must agree with the above.
    double g = s.gamma();
    std::vector<std::string> gform;
    check_strict(gform, g > e, "gamma > 0 fails");
    check_strict(gform, g < pi - e, "gamma < pi fails");
    check_strict(gform, bl + g / 2 < pi - e, "beta_l + gamma/2 < pi fails");
    check_strict(gform, br + g / 2 < pi - e, "beta_r + gamma/2 < pi fails");
    check_strict(gform, bl + br + g / 2 > pi + e, "beta_l + beta_r + gamma/2 > pi fails");
    if (out.empty() != gform.empty())
        out.push_back("internal: gamma-form conditions disagree with (i)-(iii)");
    for (auto& v : gform) out.push_back("gamma-form: " + v);
    return out;
}

std::vector<std::string> validate_new(const GadgetSpec& s, const Tolerance& tol) {
    std::vector<std::string> out;
    double a = s.alpha, bl = s.beta_l, br = s.beta_r, dl = s.delta_l, dr = s.delta_r;
    double e = tol.eps_ang;
    if (s.ridge_len <= 0.0) out.push_back("ridge length must be positive");
    check_strict(out, a < bl + br - e, "(i) alpha < beta_l + beta_r fails");
    check_strict(out, bl < a + br - e, "(i) beta_l < alpha + beta_r fails");
    check_strict(out, br < a + bl - e, "(i) beta_r < alpha + beta_l fails");
    check_strict(out, a + bl + br < 2.0 * pi - e, "(ii) alpha + beta_l + beta_r < 2pi fails");
    check_strict(out, dl >= -e && dr >= -e, "(iii.a) delta_sigma >= 0 fails");
    check_strict(out, dl < pi / 2 - e && dr < pi / 2 - e, "(iii.b) delta_sigma < pi/2 fails");
    double g = s.gamma();
    check_strict(out, g + dl + dr < pi - e, "(iii.c) gamma + delta_l + delta_r < pi fails");
    if (!out.empty()) return out;
    GammaSplit gs = gamma_split(g, dl, dr, tol);
    double phi_l = bl + gs.gamma_l / 2 - pi / 2;
    double phi_r = br + gs.gamma_r / 2 - pi / 2;
    check_strict(out, phi_l >= -e, "(iv) beta_l + gamma_l/2 >= pi/2 fails");
    check_strict(out, phi_r >= -e, "(iv) beta_r + gamma_r/2 >= pi/2 fails");
    if (std::fabs(phi_l) <= e && std::fabs(phi_r) <= e)
        out.push_back("(iv) simultaneous equalities beta+gamma/2 = pi/2 excluded (flat extrusion)");
    // Derived facts kept as explicit checks.
    check_strict(out, gs.gamma_l < pi / 2 && gs.gamma_r < pi / 2,
                 "internal: gamma_sigma < pi/2 fails");
    check_strict(out, bl > dl && br > dr, "delta_sigma < beta_sigma fails");
    return out;
}

Vec2 Frame::from_b(int side, double theta) const {
    // B_L -> A sits at angle pi; the wedge side is reached by rotating
    // clockwise. Mirrored for B_R.
    if (side == 0) return dir_of(pi - theta);
    return dir_of(gamma - pi + theta);
}

Frame make_frame(const GadgetSpec& spec) {
    Frame f;
    f.spec = spec;
    f.gamma = spec.gamma();
    double r = spec.ridge_len;
    f.a = {0.0, 0.0};
    f.b_l = {r, 0.0};
    f.b_r = r * dir_of(f.gamma);
    f.ang_j_l = -spec.beta_l;
    f.ang_j_r = f.gamma + spec.beta_r;
    f.ang_l_l = -spec.delta_l;
    f.ang_l_r = f.gamma + spec.delta_r;
    // C: perpendiculars to ell_sigma through B_sigma.
    Vec2 n_l = dir_of(pi / 2 - spec.delta_l);
    Vec2 n_r = dir_of(f.gamma + spec.delta_r - pi / 2);
    auto c = intersect_lines(Line::at(f.b_l, n_l), Line::at(f.b_r, n_r));
    if (!c) throw ConstructionError("frame: pleat perpendiculars are parallel");
    f.c = *c;
    return f;
}

Pose canonical_pose(const GadgetSpec& spec) {
    return Pose{-(spec.gamma() + spec.beta_r), {0.0, 0.0}, false};
}

std::pair<Vec2, Vec2> order_delims(Vec2 d1, Vec2 d2, Vec2 interior) {
    if (ccw_angle(d1, interior) <= ccw_angle(d1, d2)) return {d1, d2};
    return {d2, d1};
}

}  // namespace oriex
