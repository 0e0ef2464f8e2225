#ifndef ORIEX_DIVISION_HPP
#define ORIEX_DIVISION_HPP

#include <optional>
#include <vector>

#include "oriex/gadget_new.hpp"

namespace oriex {

// Proportional division ratios p_1..p_d, bottom level first; normalized so
// they sum to d.
struct DivisionPlan {
    std::vector<double> ratios;
    static DivisionPlan of(std::vector<double> raw);
    static DivisionPlan equal(int d);
    int d() const { return static_cast<int>(ratios.size()); }
    double p(int n) const { return ratios[n - 1]; }      // 1-based
    double q(int n) const;                               // p_1 + ... + p_n
};

// Existence of the tongue points D^(n), D'^(n-1) at level n >= 2.
bool exists_D(int n, const DivisionPlan& plan, double gamma);
// Existence of the ear points G_sigma^(n), G'_sigma^(n-1) at level n >= 2.
bool exists_G(int n, const DivisionPlan& plan, double gamma, double beta_sigma);

// For equal division: the largest level with existence (1 = none beyond the
// always-present level-1 points).
int max_n_D(double gamma);
int max_n_G(double gamma);

// ||A^(n-1) F^(n)|| and ||A^(n) F^(n)|| under the ||AB|| = d normalization.
std::pair<double, double> af_lengths(int n, const DivisionPlan& plan, double gamma);

struct DivLevel {
    // Points of level n (A^(n-1)..A^(n) strip). prev = superscript (n-1).
    Point2 a_prev, a, b_l_prev, b_l, b_r_prev, b_r;
    Point2 e_l, e_r, f;
    std::optional<Point2> dpt, dprime_prev;        // D^(n), D'^(n-1)
    std::optional<Point2> g_l, g_r;                // G_sigma^(n)
    std::optional<Point2> gp_l_prev, gp_r_prev;    // G'_sigma^(n-1)
    std::optional<Point2> j_l, j_r;                // J_sigma^(n)
    std::optional<Point2> kk_l, kk_r;              // K_sigma^(n)
    std::optional<Point2> mm_l, mm_r;              // M_sigma^(n)
    // Conventional division points.
    std::optional<Point2> d_l, d_r;                // D_sigma^(n)
};

struct DividedGadgetCP {
    CreasePattern cp;
    GadgetSpec spec;
    DivisionPlan plan;
    bool conventional = false;
    std::vector<DivLevel> levels;  // levels[n-1] = level n
    Point2 a, b_l, b_r, c;
};

DividedGadgetCP construct_divided_new(const GadgetSpec& spec, const DivisionPlan& plan,
                                      const std::optional<Pose>& pose = std::nullopt,
                                      const GadgetOptions& opts = {},
                                      const Tolerance& tol = {});

DividedGadgetCP construct_divided_conventional(const GadgetSpec& spec,
                                               const DivisionPlan& plan,
                                               const std::optional<Pose>& pose = std::nullopt,
                                               const GadgetOptions& opts = {},
                                               const Tolerance& tol = {});

// Layer-exchange variant at level n (2 <= n <= d): requires D^(n), D'^(n-1)
// absent; flips A^(n-1)E_sigma^(n) to valleys and E_L^(n)E_R^(n) to mountain.
DividedGadgetCP layer_exchange_option(const DividedGadgetCP& g, int n,
                                      const Tolerance& tol = {});

}  // namespace oriex

#endif
