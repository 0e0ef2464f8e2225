#ifndef ORIEX_VARIANTS_HPP
#define ORIEX_VARIANTS_HPP

#include <optional>

#include "oriex/gadget_new.hpp"

namespace oriex {

// Negative (intruding) gadget. Construction 1 keeps the first-construction
// naming (G'_R, P_R on the qualifying side's opposite); construction 2 keeps
// the rotated pair G'_sigma, P'_sigma and the rotation angle theta.
struct NegativeGadgetCP {
    CreasePattern cp;
    GadgetSpec spec;
    int construction = 1;
    bool mirrored = false;  // construction 1: sides swapped internally
    double theta = 0.0;
    Point2 a, b_l, b_r, c, d, e_l, e_r;
    std::optional<Point2> g_l, g_r, gp_l, gp_r, p_l, p_r, b_prime;
};

// First construction: gamma < 2pi/3 and beta_sigma <= pi/2 + gamma/4 on at
// least one side (sides mirrored internally so the qualifying side is L).
NegativeGadgetCP construct_negative_first(const GadgetSpec& spec,
                                          const std::optional<Pose>& pose = std::nullopt,
                                          const GadgetOptions& opts = {},
                                          const Tolerance& tol = {});

// Rotation angle of the true ridge projection against the wrong pattern.
double negative_theta(const GadgetSpec& spec, const Tolerance& tol = {});

struct ThetaLimits {
    double theta_l = 0.0;
    double theta_r = 0.0;
    bool l_exclusive = false;  // bound stems from the pi - gamma fold-back limit
    bool r_exclusive = false;
};
ThetaLimits negative_theta_limits(const GadgetSpec& spec, const Tolerance& tol = {});

// Second construction: both beta on one side of pi/2; throws InfeasibleError
// when theta falls outside [-theta_L, theta_R] of (gamma-pi, pi-gamma).
NegativeGadgetCP construct_negative_second(const GadgetSpec& spec,
                                           std::optional<double> theta_override = std::nullopt,
                                           const std::optional<Pose>& pose = std::nullopt,
                                           const GadgetOptions& opts = {},
                                           const Tolerance& tol = {});

// Rectangular face of the given width inserted along the ridge; returns the
// rebuilt gadget with the accumulated insertion width.
NewGadgetCP insert_face(const NewGadgetCP& g, double width, const Tolerance& tol = {});

struct Pleat {
    Ray2 ell;  // mountain
    Ray2 m;    // valley, parallel to ell
};

struct PleatCrossing {
    CreasePattern cp;
    int case_tag = 1;  // (i) 0 <= x < q, (ii) x = q, (iii) x > q
    Point2 p, q, qp, r, s_pt, sp_pt, t_pt, tp_pt;
    Ray2 s, sp, t, tp, r_ray;
    double width_sum = 0.0;  // of the outgoing pleats
};

// Redirects two crossing outgoing pleats into one direction. u_frac picks the
// reference line u between s and s' (0.5 = midline).
PleatCrossing reroute_pleats(const Pleat& left, const Pleat& right, double u_frac = 0.5,
                             const Tolerance& tol = {});

}  // namespace oriex

#endif
