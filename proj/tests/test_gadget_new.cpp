#include <doctest.h>

#include "oriex/gadget_new.hpp"
#include "test_util.hpp"

using namespace oriex;
using namespace oriex::testutil;

namespace {
const GadgetSpec cube{deg2rad(90), deg2rad(90), deg2rad(90), 0, 0, 1.0};
}

TEST_CASE("lambda closed form") {
    CHECK(lambda_height(deg2rad(90), deg2rad(90), deg2rad(90)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lambda_height(deg2rad(90), deg2rad(45), deg2rad(45)) ==
          doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("lambda oracle agrees with the closed form") {
    CHECK(lambda_oracle(deg2rad(90), deg2rad(90), deg2rad(90)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    for (auto [a, bl, br] : {std::array<double, 3>{90, 60, 90},
                             std::array<double, 3>{100, 70, 80},
                             std::array<double, 3>{60, 80, 80}}) {
        double c = lambda_height(deg2rad(a), deg2rad(bl), deg2rad(br));
        double o = lambda_oracle(deg2rad(a), deg2rad(bl), deg2rad(br));
        CHECK(std::fabs(c - o) < 1e-9);
    }
    for (int k = 0; k < 1000; ++k) {
        GadgetSpec s = random_new_spec();
        double c = lambda_height(s.alpha, s.beta_l, s.beta_r);
        double o = lambda_oracle(s.alpha, s.beta_l, s.beta_r);
        CHECK(std::fabs(c - o) < 1e-9);
    }
}

TEST_CASE("gamma split") {
    auto even = gamma_split(deg2rad(77), deg2rad(13), deg2rad(13));
    CHECK(even.gamma_l == even.gamma_r);
    CHECK(even.gamma_l + even.gamma_r == doctest::Approx(deg2rad(77)).epsilon(1e-14));

    auto s = gamma_split(deg2rad(90), deg2rad(30), 0.0);
    // tan gamma_L = 1 / (1 + tan 30 deg).
    CHECK(std::tan(s.gamma_l) ==
          doctest::Approx(1.0 / (1.0 + std::tan(deg2rad(30)))).epsilon(1e-12));
    CHECK(s.gamma_l + s.gamma_r == doctest::Approx(deg2rad(90)).epsilon(1e-13));

    for (int k = 0; k < 1000; ++k) {
        double g = uniform(0.05, pi - 0.1);
        double dl = uniform(0, std::min(pi / 2 - 0.05, pi - g - 0.05));
        double dr = uniform(0, std::min(pi / 2 - 0.05, pi - g - dl - 0.05));
        auto gs = gamma_split(g, dl, dr);
        CHECK(std::fabs(gs.gamma_l + gs.gamma_r - g) < 1e-12);
        auto sw = gamma_split(g, dr, dl);
        CHECK(std::fabs(sw.gamma_l - gs.gamma_r) < 1e-13);
        CHECK(std::fabs(sw.gamma_r - gs.gamma_l) < 1e-13);
    }
}

TEST_CASE("validate_new conditions") {
    CHECK(validate_new(cube).empty());
    // Condition (iv) fails on the left while (i)-(iii) hold:
    // gamma = 40, beta_l + gamma/4 = 80 < 90, all solid-angle checks pass.
    GadgetSpec bad{deg2rad(120), deg2rad(70), deg2rad(130), 0, 0, 1.0};
    REQUIRE(std::fabs(bad.gamma() - deg2rad(40)) < 1e-12);
    auto v = validate_new(bad);
    REQUIRE(!v.empty());
    bool iv = false;
    for (auto& m : v) iv |= m.find("(iv)") != std::string::npos;
    CHECK(iv);
    // Simultaneous equalities mean a flat extrusion (alpha = beta_l + beta_r);
    // rejected through condition (i).
    double g = deg2rad(100);
    GadgetSpec flat{2 * pi - g - 2 * (pi / 2 - g / 4), pi / 2 - g / 4, pi / 2 - g / 4, 0, 0, 1};
    CHECK(!validate_new(flat).empty());
}

TEST_CASE("cube gadget lengths match the prism formulas") {
    NewGadgetCP g = construct_new(cube);
    CHECK(dist(g.b_l, g.g_l) == doctest::Approx(std::tan(pi / 8)).epsilon(1e-12));
    CHECK(dist(g.c, g.i_l) == doctest::Approx((1 - std::cos(pi / 4)) / std::sin(pi / 2))
                                  .epsilon(1e-12));
    CHECK(dist(g.c, g.i_l) ==
          doctest::Approx(0.5 * (std::tan(pi / 4) - std::tan(pi / 8))).epsilon(1e-12));
    NewLengths nl = new_lengths(cube);
    CHECK(nl.ac == doctest::Approx(1.0 / std::cos(pi / 4)).epsilon(1e-12));
    CHECK(nl.bg_l == doctest::Approx(std::tan(pi / 8)).epsilon(1e-12));
    CHECK(nl.ci_l == doctest::Approx(0.29289321881345).epsilon(1e-10));
    CHECK(validate_pattern(g.cp).empty());
}

TEST_CASE("equality case merges E and G") {
    // beta_l + gamma/4 = pi/2 exactly on the left, strict on the right.
    double g = deg2rad(120);
    double bl = pi / 2 - g / 4;
    double br = deg2rad(80);
    GadgetSpec s{2 * pi - g - bl - br, bl, br, 0, 0, 1.0};
    REQUIRE(validate_new(s).empty());
    NewGadgetCP ng = construct_new(s);
    CHECK(ng.case_l == SideCase::EqDelta0);
    CHECK(ng.case_r == SideCase::StrictDelta0);
    CHECK(dist(ng.e_l, ng.g_l) < 1e-9);
    CHECK(validate_pattern(ng.cp).empty());
}

TEST_CASE("delta > 0 cases, both variants") {
    GadgetSpec s{deg2rad(48), deg2rad(60), deg2rad(96), deg2rad(10), 0, 1.0};
    REQUIRE(validate_new(s).empty());
    NewGadgetCP a = construct_new(s);
    CHECK(a.case_l == SideCase::StrictDeltaPos);
    CHECK(a.case_r == SideCase::StrictDelta0);
    REQUIRE(a.h_l);
    CHECK(!a.h_r);
    CHECK(angle_at(a.b_l, a.e_l, *a.h_l) == doctest::Approx(deg2rad(10)).epsilon(1e-9));
    CHECK(validate_pattern(a.cp).empty());

    NewGadgetOptions ob;
    ob.variant_b = true;
    NewGadgetCP b = construct_new(s, std::nullopt, ob);
    CHECK(validate_pattern(b.cp).empty());
}

TEST_CASE("angle identities at B and ordering on the A-E segment") {
    for (int k = 0; k < 400; ++k) {
        GadgetSpec s = random_new_spec(k % 2 ? 0.0 : 0.5);
        NewGadgetCP g = construct_new(s);
        for (int side = 0; side < 2; ++side) {
            Point2 b = side == 0 ? g.b_l : g.b_r;
            Point2 e = side == 0 ? g.e_l : g.e_r;
            Point2 gp = side == 0 ? g.g_l : g.g_r;
            double gs = side == 0 ? g.split.gamma_l : g.split.gamma_r;
            double delta = side == 0 ? s.delta_l : s.delta_r;
            CHECK(angle_at(b, g.c, e) == doctest::Approx(gs / 2).epsilon(1e-7));
            CHECK(angle_at(b, g.a, e) ==
                  doctest::Approx(pi / 2 + gs / 2 + delta).epsilon(1e-7));
            // G on segment A-E, H between G and E.
            Vec2 d = normalized(e - g.a);
            double tg = dot(gp - g.a, d);
            CHECK(tg > -1e-9);
            CHECK(tg < dist(g.a, e) + 1e-9);
            auto h = side == 0 ? g.h_l : g.h_r;
            if (h) {
                double th = dot(*h - g.a, d);
                CHECK(th > tg - 1e-9);
                CHECK(th < dist(g.a, e) + 1e-9);
            }
        }
    }
}

TEST_CASE("closed-form lengths match the constructed pattern") {
    for (int k = 0; k < 400; ++k) {
        GadgetSpec s = random_new_spec(k % 2 ? 0.0 : 0.5);
        s.ridge_len = uniform(0.5, 2.0);
        NewGadgetCP g = construct_new(s);
        NewLengths nl = new_lengths(s);
        CHECK(std::fabs(dist(g.a, g.c) - nl.ac) < 1e-9 * std::max(1.0, nl.ac));
        CHECK(std::fabs(dist(g.b_l, g.c) - nl.bc_l) < 1e-9 * std::max(1.0, nl.bc_l));
        CHECK(std::fabs(dist(g.b_r, g.c) - nl.bc_r) < 1e-9 * std::max(1.0, nl.bc_r));
        CHECK(std::fabs(dist(g.b_l, g.g_l) - nl.bg_l) < 1e-8 * std::max(1.0, nl.bg_l));
        CHECK(std::fabs(dist(g.b_r, g.g_r) - nl.bg_r) < 1e-8 * std::max(1.0, nl.bg_r));
        CHECK(std::fabs(dist(g.c, g.i_l) - std::fabs(nl.ci_l)) <
              1e-8 * std::max(1.0, std::fabs(nl.ci_l)));
        CHECK(std::fabs(dist(g.c, g.i_r) - std::fabs(nl.ci_r)) <
              1e-8 * std::max(1.0, std::fabs(nl.ci_r)));
    }
}

TEST_CASE("random new gadgets validate cleanly, including variants") {
    for (int k = 0; k < 1000; ++k) {
        GadgetSpec s = random_new_spec(k % 3 == 0 ? 0.6 : 0.0);
        NewGadgetOptions o;
        o.variant_b = k % 5 == 0;
        NewGadgetCP g = construct_new(s, std::nullopt, o);
        auto diags = validate_pattern(g.cp);
        if (!diags.empty()) {
            CAPTURE(rad2deg(s.alpha));
            CAPTURE(rad2deg(s.beta_l));
            CAPTURE(rad2deg(s.beta_r));
            CAPTURE(rad2deg(s.delta_l));
            CAPTURE(rad2deg(s.delta_r));
            CAPTURE(diags[0].message);
        }
        CHECK(diags.empty());
    }
}
