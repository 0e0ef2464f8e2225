#include "oriex/interference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "oriex/gadget_new.hpp"

namespace oriex {

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
}

double PolyhedronSpec::alpha(int i) const {
    Point2 prev = b(i - 1), cur = b(i), next = b(i + 1);
    return angle_between(prev - cur, next - cur);
}

double PolyhedronSpec::gamma(int i) const {
    return 2.0 * pi - alpha(i) - ang(i).beta_l - ang(i).beta_r;
}

double PolyhedronSpec::lambda(int i) const {
    return lambda_height(alpha(i), ang(i).beta_l, ang(i).beta_r);
}

double PolyhedronSpec::edge_len(int i) const { return dist(b(i), b(i + 1)); }

GadgetSpec PolyhedronSpec::gadget(int i) const {
    const VertexAngles& va = ang(i);
    return GadgetSpec{alpha(i), va.beta_l, va.beta_r, va.delta_l, va.delta_r, 1.0};
}

bool PolyhedronSpec::is_prism(const Tolerance& tol) const {
    for (int i = 0; i < n(); ++i) {
        const VertexAngles& va = ang(i);
        if (std::fabs(va.beta_l - pi / 2) > tol.eps_ang ||
            std::fabs(va.beta_r - pi / 2) > tol.eps_ang || va.delta_l > tol.eps_ang ||
            va.delta_r > tol.eps_ang)
            return false;
    }
    return true;
}

std::vector<std::string> validate_polyhedron(const PolyhedronSpec& s, const Tolerance& tol) {
    std::vector<std::string> out;
    if (s.n() < 3) {
        out.push_back("base polygon needs at least 3 vertices");
        return out;
    }
    if (static_cast<int>(s.angles.size()) != s.n()) {
        out.push_back("angles list must match base vertex count");
        return out;
    }
    double area2 = 0.0;
    for (int i = 0; i < s.n(); ++i) area2 += cross(s.b(i), s.b(i + 1));
    if (area2 <= 0.0) out.push_back("base polygon must be counterclockwise");
    for (int i = 0; i < s.n(); ++i) {
        if (cross(s.b(i + 1) - s.b(i), s.b(i + 2) - s.b(i + 1)) <= tol.eps_len)
            out.push_back("base polygon not strictly convex at vertex " + std::to_string(i));
        if (s.edge_len(i) <= tol.eps_len)
            out.push_back("degenerate base edge " + std::to_string(i));
    }
    if (!out.empty()) return out;
    for (int i = 0; i < s.n(); ++i) {
        double a = s.alpha(i);
        const auto& va = s.ang(i);
        double e = tol.eps_ang;
        if (!(a < va.beta_l + va.beta_r - e) || !(va.beta_l < a + va.beta_r - e) ||
            !(va.beta_r < a + va.beta_l - e))
            out.push_back("(i) solid-angle inequality fails at vertex " + std::to_string(i));
        if (!(a + va.beta_l + va.beta_r < 2 * pi - e))
            out.push_back("(ii) angle sum >= 2pi at vertex " + std::to_string(i));
        if (va.delta_l < -e || va.delta_r < -e || va.delta_l >= pi / 2 || va.delta_r >= pi / 2)
            out.push_back("delta out of range at vertex " + std::to_string(i));
    }
    if (s.height < 0.0) out.push_back("height must be >= 0");
    return out;
}

namespace {

double norm_factor(const PolyhedronSpec& s, int i, KappaNorm norm) {
    // Lengths below are per unit ridge; per unit height divide by lambda_i.
    return norm == KappaNorm::Height ? s.lambda(i) : 1.0;
}

}  // namespace

double kappa_conv_vertex(const PolyhedronSpec& s, int i, int side, KappaNorm norm) {
    GadgetSpec g = s.gadget(i);
    auto viol = validate_conv(g);
    if (!viol.empty()) throw DomainError("kappa_conv_vertex: invalid ridge " + std::to_string(i));
    return bd_length(g, side) / norm_factor(s, i, norm);
}

double kappa_in_vertex(const PolyhedronSpec& s, int i, int side, KappaNorm norm) {
    GadgetSpec g = s.gadget(i);
    auto viol = validate_new(g);
    if (!viol.empty()) throw DomainError("kappa_in_vertex: invalid ridge " + std::to_string(i));
    NewLengths nl = new_lengths(g);
    return (side == 0 ? nl.ci_l : nl.ci_r) / norm_factor(s, i, norm);
}

double kappa_out_vertex(const PolyhedronSpec& s, int i, int side, KappaNorm norm) {
    GadgetSpec g = s.gadget(i);
    auto viol = validate_new(g);
    if (!viol.empty()) throw DomainError("kappa_out_vertex: invalid ridge " + std::to_string(i));
    NewLengths nl = new_lengths(g);
    return (side == 0 ? nl.bg_l : nl.bg_r) / norm_factor(s, i, norm);
}

double kappa_edge_conv(const PolyhedronSpec& s, int i) {
    return kappa_conv_vertex(s, i, 1) + kappa_conv_vertex(s, i + 1, 0);
}

double kappa_edge_new(const PolyhedronSpec& s, int i, PleatOrder* order) {
    double a = kappa_in_vertex(s, i, 1) + kappa_out_vertex(s, i + 1, 0);
    double b = kappa_out_vertex(s, i, 1) + kappa_in_vertex(s, i + 1, 0);
    if (order) {
        double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
        if (std::fabs(a - b) <= 1e-12 * scale)
            *order = PleatOrder::Tie;
        else
            *order = a < b ? PleatOrder::ThisInner : PleatOrder::NextInner;
    }
    return std::min(a, b);
}

double h_max(const PolyhedronSpec& s) {
    // A top edge shrinks to a point where the two ridges meet; that happens
    // only when the face angles lean together, beta_(i,R) + beta_(i+1,L) > pi.
    double best = inf;
    for (int i = 0; i < s.n(); ++i) {
        double br = s.ang(i).beta_r, bl = s.ang(i + 1).beta_l;
        if (br + bl <= pi) continue;
        double tb = s.edge_len(i) * std::sin(bl) / std::fabs(std::sin(br + bl));
        best = std::min(best, s.lambda(i) * tb);
    }
    return best;
}

InterferenceReport solve_heights(const PolyhedronSpec& s, KappaNorm norm) {
    auto viol = validate_polyhedron(s);
    if (!viol.empty()) {
        std::ostringstream os;
        os << "solve_heights:";
        for (auto& v : viol) os << " " << v << ";";
        throw DomainError(os.str());
    }
    int n = s.n();
    InterferenceReport rep;
    rep.h_max = h_max(s);

    for (int i = 0; i < n; ++i) {
        InterferenceReport::VertexRow row{};
        row.alpha = s.alpha(i);
        row.gamma = s.gamma(i);
        row.lambda = s.lambda(i);
        row.kconv_l = kappa_conv_vertex(s, i, 0, norm);
        row.kconv_r = kappa_conv_vertex(s, i, 1, norm);
        row.kin_l = kappa_in_vertex(s, i, 0, norm);
        row.kin_r = kappa_in_vertex(s, i, 1, norm);
        row.kout_l = kappa_out_vertex(s, i, 0, norm);
        row.kout_r = kappa_out_vertex(s, i, 1, norm);
        rep.vertex_rows.push_back(row);
    }

    rep.h_conv = rep.h_max;
    rep.h_new = rep.h_max;
    rep.binding_conv = -1;
    rep.binding_new = -1;
    std::vector<PleatOrder> pref(n, PleatOrder::Tie);
    std::vector<double> sum_this(n), sum_next(n);
    for (int i = 0; i < n; ++i) {
        InterferenceReport::EdgeRow row{};
        row.len = s.edge_len(i);
        row.kconv = kappa_edge_conv(s, i);
        sum_this[i] = kappa_in_vertex(s, i, 1) + kappa_out_vertex(s, i + 1, 0);
        sum_next[i] = kappa_out_vertex(s, i, 1) + kappa_in_vertex(s, i + 1, 0);
        row.knew = kappa_edge_new(s, i, &pref[i]);
        row.order = pref[i];
        row.knew_used = row.knew;
        rep.edge_rows.push_back(row);
        double cap_conv = row.len / row.kconv;
        if (cap_conv < rep.h_conv) {
            rep.h_conv = cap_conv;
            rep.binding_conv = i;
        }
    }

    // Pleat-order realizability: each edge prefers its "inner" gadget folded
    // first. A linear gadget order exists unless every edge is strictly
    // directed the same way around the cycle; then the least-harmful edge is
    // pushed off its minimum.
    bool all_fwd = true, all_bwd = true;
    for (int i = 0; i < n; ++i) {
        if (pref[i] != PleatOrder::ThisInner) all_fwd = false;
        if (pref[i] != PleatOrder::NextInner) all_bwd = false;
    }
    if (all_fwd || all_bwd) {
        int flip = -1;
        double best_penalty = inf;
        for (int i = 0; i < n; ++i) {
            double other = std::max(sum_this[i], sum_next[i]);
            double cur = rep.edge_rows[i].knew;
            double penalty = (other - cur) / rep.edge_rows[i].len;
            if (penalty < best_penalty) {
                best_penalty = penalty;
                flip = i;
            }
        }
        rep.edge_rows[flip].flipped = true;
        rep.edge_rows[flip].knew_used = std::max(sum_this[flip], sum_next[flip]);
        rep.edge_rows[flip].order =
            rep.edge_rows[flip].order == PleatOrder::ThisInner ? PleatOrder::NextInner
                                                               : PleatOrder::ThisInner;
        pref[flip] = rep.edge_rows[flip].order;
        rep.warnings.push_back("edge " + std::to_string(flip) +
                               " forced off its minimal pleat order by the folding cycle");
    }

    for (int i = 0; i < n; ++i) {
        double cap = rep.edge_rows[i].len / rep.edge_rows[i].knew_used;
        if (cap < rep.h_new) {
            rep.h_new = cap;
            rep.binding_new = i;
        }
    }

    // A concrete folding order consistent with the per-edge preferences: cut
    // the cycle at an edge that is a tie or points backward, then follow it.
    {
        int cut = 0;
        for (int i = 0; i < n; ++i)
            if (pref[i] != PleatOrder::ThisInner) cut = i;
        // Gadget cut+1 first; ties resolved along the walking direction.
        for (int k = 1; k <= n; ++k) rep.fold_order.push_back(s.wrap(cut + k));
    }

    rep.height = s.height > 0.0 ? s.height : rep.h_new;
    rep.feasible_conv = rep.height <= rep.h_conv * (1 + 1e-12) + 1e-15;
    rep.feasible_new = rep.height <= rep.h_new * (1 + 1e-12) + 1e-15;
    return rep;
}

double h_conv_triangle(double a, double b, double c) {
    double f1 = a + b - c, f2 = b + c - a, f3 = c + a - b;
    if (f1 <= 0.0 || f2 <= 0.0 || f3 <= 0.0)
        throw DomainError("h_conv_triangle: side lengths do not form a triangle");
    return std::sqrt(f1 * f2 * f3 / (a + b + c));
}

double two_r(const PolyhedronSpec& s, int i) {
    double ai = s.alpha(i), aj = s.alpha(i + 1);
    return s.edge_len(i) * 2.0 * std::sin(ai / 2) * std::sin(aj / 2) / std::sin((ai + aj) / 2);
}

double kappa_ave_edge(const PolyhedronSpec& s, int i) {
    double gi = s.gamma(i), gj = s.gamma(i + 1);
    return 0.25 * (std::tan(gi / 2) + std::tan(gj / 2) + std::tan(gi / 4) + std::tan(gj / 4));
}

ReplaceCheck can_replace_conventional(const GadgetSpec& spec, const Tolerance& tol) {
    ReplaceCheck out;
    auto viol = validate_conv(spec, tol);
    if (!viol.empty()) {
        out.reason = "not a valid conventional gadget";
        return out;
    }
    double g = spec.gamma();
    double phi_l = spec.beta_l + g / 4 - pi / 2;
    double phi_r = spec.beta_r + g / 4 - pi / 2;
    if (phi_l < -tol.eps_ang) {
        out.reason = "beta_l + gamma/4 < pi/2";
        return out;
    }
    if (phi_r < -tol.eps_ang) {
        out.reason = "beta_r + gamma/4 < pi/2";
        return out;
    }
    if (std::fabs(phi_l) <= tol.eps_ang && std::fabs(phi_r) <= tol.eps_ang) {
        out.reason = "both sides at the equality bound (flat extrusion)";
        return out;
    }
    out.ok = true;
    out.reason = "replaceable with the same outgoing pleats";
    return out;
}

}  // namespace oriex
