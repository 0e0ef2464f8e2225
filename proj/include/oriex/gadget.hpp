#ifndef ORIEX_GADGET_HPP
#define ORIEX_GADGET_HPP

#include <string>
#include <vector>

#include "oriex/cp.hpp"
#include "oriex/geom.hpp"

namespace oriex {

// Angles of one ridge gadget, radians. gamma is the gap angle left in the
// development between the two ridge images.
struct GadgetSpec {
    double alpha = 0.0;
    double beta_l = 0.0;
    double beta_r = 0.0;
    double delta_l = 0.0;
    double delta_r = 0.0;
    double ridge_len = 1.0;
    double gamma() const { return 2.0 * pi - alpha - beta_l - beta_r; }
};

struct GammaSplit {
    double gamma_l = 0.0;
    double gamma_r = 0.0;
};

// Split of gamma induced by the pleat-angle changes delta_l, delta_r.
GammaSplit gamma_split(double gamma, double delta_l, double delta_r,
                       const Tolerance& tol = {});

// Height of the extrusion per unit ridge length.
double lambda_height(double alpha, double beta_l, double beta_r);

// Same value obtained by solving the three-constraint vector system of the
// folded ridge direction; independent of lambda_height's closed form.
double lambda_oracle(double alpha, double beta_l, double beta_r);

std::vector<std::string> validate_conv(const GadgetSpec& spec, const Tolerance& tol = {});
std::vector<std::string> validate_new(const GadgetSpec& spec, const Tolerance& tol = {});

// Natural construction frame: A at the origin, ridge image A-B_L along +x,
// the gap wedge swept counterclockwise to A-B_R at angle gamma.
struct Frame {
    GadgetSpec spec;
    double gamma;
    Point2 a, b_l, b_r, c;
    double ang_j_l, ang_j_r;  // j_sigma / k_sigma direction angles
    double ang_l_l, ang_l_r;  // pleat (ell_sigma, m_sigma) direction angles
    Vec2 j_dir(int side) const { return dir_of(side == 0 ? ang_j_l : ang_j_r); }
    Vec2 l_dir(int side) const { return dir_of(side == 0 ? ang_l_l : ang_l_r); }
    // Direction of the ray from B_sigma making angle `theta` with B_sigma->A,
    // opening into the gap wedge.
    Vec2 from_b(int side, double theta) const;
};
Frame make_frame(const GadgetSpec& spec);

// Pose rotating the natural frame so that k_R points along +x, A at origin.
Pose canonical_pose(const GadgetSpec& spec);

// Orders (d1,d2) so the CCW sweep from the first to the second passes through
// `interior`, for folded-boundary delimiters.
std::pair<Vec2, Vec2> order_delims(Vec2 d1, Vec2 d2, Vec2 interior);

}  // namespace oriex

#endif
