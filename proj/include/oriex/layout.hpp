#ifndef ORIEX_LAYOUT_HPP
#define ORIEX_LAYOUT_HPP

#include <optional>
#include <string>
#include <vector>

#include "oriex/division.hpp"
#include "oriex/interference.hpp"
#include "oriex/variants.hpp"

namespace oriex {

enum class Family { Conventional, New, Auto };

struct LayoutOptions {
    Family family = Family::New;
    std::optional<DivisionPlan> plan;  // applied at every ridge
    bool variant_b = false;
};

// Full-sheet development: top polygon, unfolded side faces, one gadget per
// ridge, merged crease pattern and the interference report at the height used.
struct Development {
    PolyhedronSpec spec;
    double height = 0.0;
    std::vector<Family> family;            // per ridge
    std::vector<Point2> top;               // placed A_i
    std::vector<Point2> b_img_l, b_img_r;  // developed B_i images per ridge
    CreasePattern cp;
    InterferenceReport report;
    std::vector<std::string> warnings;
};

Development develop(const PolyhedronSpec& spec, const LayoutOptions& opts = {},
                    const Tolerance& tol = {});

// Prism extrusion with a rectangular face inserted at every ridge (a 2N-sided
// prism folded with N gadgets). Widths must close: sum of w_i times the
// outward corner bisectors must vanish.
Development develop_inserted_prism(const PolyhedronSpec& spec,
                                   const std::vector<double>& widths,
                                   const Tolerance& tol = {});

}  // namespace oriex

#endif
