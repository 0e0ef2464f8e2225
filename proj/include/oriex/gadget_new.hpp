#ifndef ORIEX_GADGET_NEW_HPP
#define ORIEX_GADGET_NEW_HPP

#include <optional>

#include "oriex/gadget.hpp"
#include "oriex/gadget_conv.hpp"

namespace oriex {

// Fold-assignment case per side, from Table-style case split.
enum class SideCase {
    StrictDelta0,    // beta + gamma_s/2 > pi/2, delta = 0
    StrictDeltaPos,  // beta + gamma_s/2 > pi/2, delta > 0 (two valid variants)
    EqDelta0,        // beta + gamma_s/2 = pi/2, delta = 0 (E = G merged)
    EqDeltaPos,      // beta + gamma_s/2 = pi/2, delta > 0 (G = H merged)
};

struct NewGadgetOptions : GadgetOptions {
    bool variant_b = false;  // alternate assignment when delta > 0 and strict
};

// Flat-back gadget for one ridge. Points are in the posed frame. For
// inserted_width > 0 the right half is shifted by the insertion and a2/c2/d2
// hold the shifted copies of A, C, D.
struct NewGadgetCP {
    CreasePattern cp;
    GadgetSpec spec;
    GammaSplit split;
    SideCase case_l, case_r;
    Pose pose;
    NewGadgetOptions opts;
    bool variant_b = false;
    double inserted_width = 0.0;
    Point2 a, b_l, b_r, c, d, e_l, e_r, f, g_l, g_r, i_l, i_r;
    std::optional<Point2> h_l, h_r;
    Point2 a2, c2, d2;
    Ray2 j_l, j_r, k_l, k_r, l_l, l_r, m_l, m_r;
};

NewGadgetCP construct_new(const GadgetSpec& spec,
                          const std::optional<Pose>& pose = std::nullopt,
                          const NewGadgetOptions& opts = {}, const Tolerance& tol = {},
                          double inserted_width = 0.0);

struct NewLengths {
    double ac, bc_l, bc_r, bg_l, bg_r, ci_l, ci_r;
};
// Closed-form construction lengths, scaled by ridge_len.
NewLengths new_lengths(const GadgetSpec& spec, const Tolerance& tol = {});

}  // namespace oriex

#endif
