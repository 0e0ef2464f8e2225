#ifndef ORIEX_GADGET_CONV_HPP
#define ORIEX_GADGET_CONV_HPP

#include <optional>

#include "oriex/gadget.hpp"

namespace oriex {

struct GadgetOptions {
    bool include_jk = true;  // layout replaces j/k rays with polygon edges
    bool sheet = true;
};

// Pyramid-supported gadget for one ridge.
struct ConvGadgetCP {
    CreasePattern cp;
    GadgetSpec spec;
    Point2 a, b_l, b_r, c, d_l, d_r;
    Ray2 j_l, j_r, k_l, k_r, l_l, l_r, m_l, m_r;
    int va, vb_l, vb_r, vd_l, vd_r;
};

ConvGadgetCP construct_conventional(const GadgetSpec& spec,
                                    const std::optional<Pose>& pose = std::nullopt,
                                    const GadgetOptions& opts = {},
                                    const Tolerance& tol = {});

// ||B_sigma D_sigma||, side 0 = L, 1 = R.
double bd_length(const GadgetSpec& spec, int side);

}  // namespace oriex

#endif
