#include <doctest.h>

#include <set>

#include "oriex/variants.hpp"
#include "test_util.hpp"

using namespace oriex;
using namespace oriex::testutil;

namespace {
const GadgetSpec cube{pi / 2, pi / 2, pi / 2, 0, 0, 1.0};

GadgetSpec with_gamma(double gamma_deg, double bl_deg, double br_deg) {
    double g = deg2rad(gamma_deg), bl = deg2rad(bl_deg), br = deg2rad(br_deg);
    return GadgetSpec{2 * pi - g - bl - br, bl, br, 0, 0, 1.0};
}

// Composition of reflections across the given crease lines, evaluated at p.
Point2 reflect_chain(const std::vector<Line>& lines, Point2 p) {
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) p = reflect_point(p, *it);
    return p;
}
}  // namespace

TEST_CASE("negative first construction") {
    NegativeGadgetCP g = construct_negative_first(cube);
    CHECK(validate_pattern(g.cp).empty());
    // Existence identity at the tongue corner:
    // angle(P,E_L,E_R) + angle(P,E_R,E_L) = pi/2 + 3 gamma/4 < pi.
    REQUIRE(g.p_r);
    double s = angle_at(g.e_l, *g.p_r, g.e_r) + angle_at(g.e_r, *g.p_r, g.e_l);
    CHECK(s == doctest::Approx(pi / 2 + 0.75 * cube.gamma()).epsilon(1e-9));
    CHECK(pi / 2 + 0.75 * cube.gamma() < pi);

    CHECK_THROWS_AS(construct_negative_first(with_gamma(130, 70, 70)), DomainError);
}

TEST_CASE("negative first with mirrored qualifying side") {
    GadgetSpec s = with_gamma(80, 115, 85);  // only the right side qualifies
    REQUIRE(validate_new(s).empty());
    NegativeGadgetCP g = construct_negative_first(s);
    CHECK(g.mirrored);
    CHECK(validate_pattern(g.cp).empty());
    CHECK(g.g_r);   // the qualifying-side ear tip, physically on the right
    CHECK(g.gp_l);  // partner points mirrored to the left
    CHECK(g.p_l);
}

TEST_CASE("negative theta and limits") {
    CHECK(negative_theta(cube) == doctest::Approx(0.0));
    // beta_l = beta_r -> symmetric numerator.
    CHECK(negative_theta(with_gamma(100, 70, 70)) == doctest::Approx(0.0).epsilon(1e-12));
    // Closed form.
    GadgetSpec s = with_gamma(90, 70, 85);
    double tl = std::tan(s.beta_l), tr = std::tan(s.beta_r);
    double expect = std::atan((tr - tl) / (2 + (tl + tr) / std::tan(s.gamma() / 2)));
    CHECK(negative_theta(s) == doctest::Approx(expect).epsilon(1e-12));
    // beta_l < pi/2 = beta_r gives theta = gamma/2.
    CHECK(negative_theta(with_gamma(90, 80, 90)) == doctest::Approx(deg2rad(45)).epsilon(1e-12));
    CHECK(negative_theta(with_gamma(90, 90, 100)) ==
          doctest::Approx(-deg2rad(45)).epsilon(1e-12));
    // Limits: gamma = 90, beta = 80 -> min{45, 35, 90} = 35 degrees.
    ThetaLimits lim = negative_theta_limits(with_gamma(90, 80, 80));
    CHECK(lim.theta_l == doctest::Approx(deg2rad(35)).epsilon(1e-12));
    CHECK(lim.theta_r == doctest::Approx(deg2rad(35)).epsilon(1e-12));
    CHECK(!lim.r_exclusive);
    // gamma = 140: the pi - gamma bound binds and is exclusive.
    ThetaLimits lim2 = negative_theta_limits(with_gamma(140, 85, 90));
    CHECK(lim2.theta_r == doctest::Approx(deg2rad(40)).epsilon(1e-12));
    CHECK(lim2.r_exclusive);
}

TEST_CASE("negative second construction") {
    NegativeGadgetCP g = construct_negative_second(cube);
    CHECK(g.theta == doctest::Approx(0.0));
    CHECK(validate_pattern(g.cp).empty());
    REQUIRE(g.b_prime);
    CHECK(dist(*g.b_prime, g.a) < 1e-9);  // the prism ridge projects onto A

    // Symmetric non-right case: mirror symmetry about the axis.
    GadgetSpec s = with_gamma(80, 75, 75);
    NegativeGadgetCP m = construct_negative_second(s);
    CHECK(validate_pattern(m.cp).empty());
    Line axis = Line::through(m.a, m.c);
    REQUIRE(m.gp_l);
    REQUIRE(m.gp_r);
    CHECK(dist(reflect_point(*m.gp_l, axis), *m.gp_r) < 1e-9);
    REQUIRE(m.p_l);
    REQUIRE(m.p_r);
    CHECK(dist(reflect_point(*m.p_l, axis), *m.p_r) < 1e-9);

    // Asymmetric: A-D rotated by theta overlaps an extension of A-B'.
    GadgetSpec a = with_gamma(90, 70, 85);
    NegativeGadgetCP ga = construct_negative_second(a);
    CHECK(validate_pattern(ga.cp).empty());
    REQUIRE(ga.b_prime);
    Vec2 ab = normalized(*ga.b_prime - ga.a);
    Vec2 ad = rotated(normalized(ga.d - ga.a), ga.theta);
    CHECK(std::fabs(cross(ab, ad)) < 1e-9);

    // Documented infeasible family: gamma >= 2pi/3 with beta_l < pi/2 = beta_r.
    CHECK_THROWS_AS(construct_negative_second(with_gamma(140, 85, 90)), InfeasibleError);
    // Mixed sides rejected.
    CHECK_THROWS_AS(construct_negative_second(with_gamma(90, 85, 95)), DomainError);
}

TEST_CASE("negative second is always feasible for gamma < 2pi/3 (one-sided betas)") {
    int done = 0;
    for (int k = 0; k < 4000 && done < 1000; ++k) {
        double g = uniform(0.1, 2 * pi / 3 - 0.02);
        bool low = k % 2 == 0;
        double bl, br;
        if (low) {
            bl = uniform(pi / 2 - g / 4 + 0.01, pi / 2);
            br = uniform(pi / 2 - g / 4 + 0.01, pi / 2);
        } else {
            bl = uniform(pi / 2, pi - g / 2 - 0.02);
            br = uniform(pi / 2, pi - g / 2 - 0.02);
        }
        GadgetSpec s{2 * pi - g - bl - br, bl, br, 0, 0, 1.0};
        if (!validate_new(s).empty()) continue;
        NegativeGadgetCP neg = construct_negative_second(s);
        auto diags = validate_pattern(neg.cp);
        if (!diags.empty()) {
            CAPTURE(rad2deg(g));
            CAPTURE(rad2deg(bl));
            CAPTURE(rad2deg(br));
            CAPTURE(diags[0].message);
        }
        CHECK(diags.empty());
        ++done;
    }
    CHECK(done == 1000);
}

TEST_CASE("first and second constructions at beta_l = pi/2") {
    // Both constructions apply and fold the same solid. The pleat fold-back
    // crease through C coincides exactly; the ear creases are anchored
    // differently by the two procedures (see the first construction's
    // G_L-through-D line vs the rotated line of the second).
    GadgetSpec s = with_gamma(90, 90, 120);
    REQUIRE(validate_new(s).empty());
    NegativeGadgetCP c2 = construct_negative_second(s);
    CHECK(validate_pattern(c2.cp).empty());
    NegativeGadgetCP c1 = construct_negative_first(s);
    CHECK(validate_pattern(c1.cp).empty());
    CHECK(c2.theta == doctest::Approx(-s.gamma() / 2));
    REQUIRE(c1.p_r);
    REQUIRE(c2.p_r);
    CHECK(dist(*c1.p_r, *c2.p_r) < 1e-9);
    // The rotated pleat line reaches E_L at this theta, as in the first
    // construction's E_L-C-P_R crease.
    REQUIRE(c2.p_l);
    CHECK(dist(*c2.p_l, c2.e_l) < 1e-9);
    // Shared base points.
    CHECK(dist(c1.e_l, c2.e_l) < 1e-9);
    CHECK(dist(c1.e_r, c2.e_r) < 1e-9);
    CHECK(dist(c1.c, c2.c) < 1e-9);
}

TEST_CASE("insert_face") {
    NewGadgetCP g = construct_new(cube);
    NewGadgetCP same = insert_face(g, 0.0);
    CHECK(same.cp.vertices.size() == g.cp.vertices.size());

    NewGadgetCP wide1 = insert_face(g, 1.0);
    CHECK(validate_pattern(wide1.cp).empty());
    CHECK(dist(wide1.a, wide1.a2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dist(wide1.d, wide1.d2) == doctest::Approx(1.0).epsilon(1e-12));
    // The long valley E_L E_R spans the strip as one straight crease.
    bool found = false;
    for (const auto& c : wide1.cp.creases) {
        if (c.label != "EL-ER") continue;
        found = true;
        CHECK(dist(wide1.cp.vertices[c.a], wide1.cp.vertices[c.b]) ==
              doctest::Approx(dist(g.e_l, g.e_r) + 1.0).epsilon(1e-9));
    }
    CHECK(found);

    // Composition: w then w' equals a single insertion of w + w'.
    NewGadgetCP two = insert_face(insert_face(g, 0.4), 0.6);
    REQUIRE(two.cp.vertices.size() == wide1.cp.vertices.size());
    for (size_t i = 0; i < two.cp.vertices.size(); ++i)
        CHECK(dist(two.cp.vertices[i], wide1.cp.vertices[i]) < 1e-12);

    // delta > 0 gadgets split as well.
    GadgetSpec d{deg2rad(48), deg2rad(60), deg2rad(96), deg2rad(10), 0, 1.0};
    NewGadgetCP gd = insert_face(construct_new(d), 0.5);
    CHECK(validate_pattern(gd.cp).empty());
}

// Crossing pleats posed as in the redirect construction: Q, Q' are the feet
// of the perpendiculars from the mountain crossing P onto the valleys.
static std::pair<Pleat, Pleat> crossing_pleats(Point2 p, Point2 q, Point2 qp, double ang_l,
                                               double ang_r, double back = 8.0) {
    Vec2 dl = dir_of(ang_l), dr = dir_of(ang_r);
    Pleat left{Ray2{p - back * dl, dl}, Ray2{q - back * dl, dl}};
    Pleat right{Ray2{p - back * dr, dr}, Ray2{qp - back * dr, dr}};
    return {left, right};
}

TEST_CASE("reroute pleats conservation and foldability") {
    auto [left, right] = crossing_pleats({0.3, 1.2}, {-1, 0}, {1, 0}, -pi / 3, pi + pi / 2.6);
    PleatCrossing x = reroute_pleats(left, right);
    CHECK(x.width_sum == doctest::Approx(dist(x.q, x.qp)).epsilon(1e-9));
    CHECK(std::fabs(dot(x.s_pt - x.sp_pt, perp(x.s.dir))) ==
          doctest::Approx(2 * dist(x.q, x.qp)).epsilon(1e-9));
    auto diags = validate_pattern(x.cp);
    if (!diags.empty()) CAPTURE(diags[0].message);
    CHECK(diags.empty());

    // The fold-map composition through the old pleats equals the one through
    // the new ones.
    auto line_of = [&](const Ray2& r) { return r.line(); };
    std::vector<Line> in = {line_of(left.m), line_of(left.ell), line_of(right.ell),
                            line_of(right.m)};
    std::vector<Line> out_lines = {line_of(x.s), line_of(x.t), line_of(x.tp),
                                   line_of(x.sp)};
    for (Point2 probe : {Point2{0.3, -2.0}, Point2{-1.0, -3.5}}) {
        Point2 a = reflect_chain(in, probe);
        Point2 b = reflect_chain(out_lines, probe);
        CHECK(dist(a, b) < 1e-9);
    }
}

TEST_CASE("reroute pleats across cases and random crossings") {
    int done = 0;
    std::set<int> cases;
    for (int k = 0; k < 500 && done < 100; ++k) {
        Point2 p{uniform(0.0, 2.0), uniform(0.5, 2.0)};
        auto [left, right] = crossing_pleats(p, {-1, 0}, {1, 0},
                                             uniform(-pi / 2 + 0.25, -0.25),
                                             pi + uniform(0.25, pi / 2 - 0.25), 10.0);
        PleatCrossing x;
        try {
            x = reroute_pleats(left, right, uniform(0.25, 0.75));
        } catch (const Error&) {
            continue;
        }
        cases.insert(x.case_tag);
        CHECK(x.width_sum == doctest::Approx(dist(x.q, x.qp)).epsilon(1e-9));
        double sep = std::fabs(dot(x.s_pt - x.sp_pt, perp(x.s.dir)));
        CHECK(sep == doctest::Approx(2 * dist(x.q, x.qp)).epsilon(1e-9));
        // r bisects s and s'.
        double ds = std::fabs(dot(x.s_pt - x.r, perp(x.s.dir)));
        double dsp = std::fabs(dot(x.sp_pt - x.r, perp(x.s.dir)));
        CHECK(ds == doctest::Approx(dsp).epsilon(1e-9));
        auto diags = validate_pattern(x.cp);
        if (!diags.empty()) CAPTURE(diags[0].message);
        CHECK(diags.empty());
        ++done;
    }
    CHECK(done == 100);
    CHECK(cases.count(1));
    CHECK(cases.count(3));
}
