#ifndef ORIEX_INTERFERENCE_HPP
#define ORIEX_INTERFERENCE_HPP

#include <string>
#include <vector>

#include "oriex/gadget.hpp"

namespace oriex {

// Base polygon with per-vertex ridge angles; height 0 means "solve for max".
struct PolyhedronSpec {
    std::vector<Point2> base;  // strictly convex, counterclockwise
    struct VertexAngles {
        double beta_l = pi / 2;
        double beta_r = pi / 2;
        double delta_l = 0.0;
        double delta_r = 0.0;
    };
    std::vector<VertexAngles> angles;  // one per base vertex
    double height = 0.0;

    int n() const { return static_cast<int>(base.size()); }
    int wrap(int i) const { return ((i % n()) + n()) % n(); }
    Point2 b(int i) const { return base[wrap(i)]; }
    const VertexAngles& ang(int i) const { return angles[wrap(i)]; }
    double alpha(int i) const;     // interior angle at B_i
    double gamma(int i) const;     // gap angle at ridge i
    double lambda(int i) const;    // height per unit ridge length
    double edge_len(int i) const;  // ||B_i B_{i+1}||
    GadgetSpec gadget(int i) const;
    bool is_prism(const Tolerance& tol = {}) const;
};

std::vector<std::string> validate_polyhedron(const PolyhedronSpec& spec,
                                             const Tolerance& tol = {});

// Interference coefficients per unit height (Kappa::Ridge rescales per unit
// ridge length of ridge i instead).
enum class KappaNorm { Height, Ridge };

double kappa_conv_vertex(const PolyhedronSpec& s, int i, int side,
                         KappaNorm norm = KappaNorm::Height);
double kappa_in_vertex(const PolyhedronSpec& s, int i, int side,
                       KappaNorm norm = KappaNorm::Height);
double kappa_out_vertex(const PolyhedronSpec& s, int i, int side,
                        KappaNorm norm = KappaNorm::Height);

double kappa_edge_conv(const PolyhedronSpec& s, int i);

enum class PleatOrder { ThisInner, NextInner, Tie };
double kappa_edge_new(const PolyhedronSpec& s, int i, PleatOrder* order = nullptr);

// Cap from ridges of adjacent vertices meeting; +inf when no edge binds.
double h_max(const PolyhedronSpec& s);

struct InterferenceReport {
    struct VertexRow {
        double alpha, gamma, lambda;
        double kconv_l, kconv_r, kin_l, kin_r, kout_l, kout_r;
    };
    struct EdgeRow {
        double len;
        double kconv, knew;
        PleatOrder order = PleatOrder::Tie;
        bool flipped = false;  // forced off its minimal sum by the fold order
        double knew_used;      // knew, or the non-minimal sum when flipped
    };
    std::vector<VertexRow> vertex_rows;
    std::vector<EdgeRow> edge_rows;
    std::vector<int> fold_order;  // gadget indices, inner first
    double h_max = 0.0, h_conv = 0.0, h_new = 0.0;
    int binding_conv = -1, binding_new = -1;
    double height = 0.0;  // requested height (h_new when input height was 0)
    bool feasible_conv = false, feasible_new = false;
    std::vector<std::string> warnings;
};

InterferenceReport solve_heights(const PolyhedronSpec& s, KappaNorm norm = KappaNorm::Height);

// Incircle-diameter closed form for the maximal conventional prism height.
double h_conv_triangle(double a, double b, double c);

// Diameter of the circle tangent to side B_i B_{i+1} and the two neighboring
// edge rays.
double two_r(const PolyhedronSpec& s, int i);

// Averaged prism coefficient (upper bound for kappa_new_perp on an edge).
double kappa_ave_edge(const PolyhedronSpec& s, int i);

struct ReplaceCheck {
    bool ok = false;
    std::string reason;
};
ReplaceCheck can_replace_conventional(const GadgetSpec& spec, const Tolerance& tol = {});

}  // namespace oriex

#endif
