#include <doctest.h>

#include "oriex/gadget_conv.hpp"
#include "test_util.hpp"

using namespace oriex;
using namespace oriex::testutil;

namespace {
const GadgetSpec cube{deg2rad(90), deg2rad(90), deg2rad(90), 0, 0, 1.0};
}

TEST_CASE("conventional validity conditions") {
    CHECK(validate_conv(cube).empty());
    CHECK(std::fabs(cube.gamma() - pi / 2) < 1e-12);

    GadgetSpec flat{deg2rad(60), deg2rad(60), deg2rad(60), 0, 0, 1.0};
    auto v = validate_conv(flat);
    REQUIRE(!v.empty());
    bool cond3 = false;
    for (auto& s : v) cond3 |= s.find("(iii)") != std::string::npos;
    CHECK(cond3);

    // All five inequalities hold for (90, 30, 100).
    GadgetSpec odd{deg2rad(90), deg2rad(30), deg2rad(100), 0, 0, 1.0};
    CHECK(validate_conv(odd).empty());

    GadgetSpec delta{deg2rad(90), deg2rad(90), deg2rad(90), deg2rad(5), 0, 1.0};
    CHECK(!validate_conv(delta).empty());
}

TEST_CASE("bd_length closed forms") {
    CHECK(bd_length(cube, 0) == doctest::Approx(0.5).epsilon(1e-12));
    // beta = 60 deg, gamma = 90 deg, ridge 2.
    GadgetSpec s{deg2rad(150), deg2rad(60), deg2rad(60), 0, 0, 2.0};
    CHECK(std::fabs(s.gamma() - pi / 2) < 1e-12);
    CHECK(bd_length(s, 0) == doctest::Approx(2.0 / (2.0 * std::sin(deg2rad(60)))).epsilon(1e-12));
    // gamma -> 0 kills the pyramid.
    GadgetSpec tiny{deg2rad(120), deg2rad(119.9), deg2rad(119.9), 0, 0, 1.0};
    CHECK(bd_length(tiny, 0) < 2e-3);
}

TEST_CASE("cube gadget geometry") {
    ConvGadgetCP g = construct_conventional(cube);
    CHECK(dist(g.b_l, g.d_l) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(dist(g.b_r, g.d_r) == doctest::Approx(0.5).epsilon(1e-12));
    // k_R along +x in the canonical pose.
    CHECK(norm(g.k_r.dir - Vec2{1, 0}) < 1e-12);
    CHECK(dist(g.a, {0, 0}) < 1e-12);
    CHECK(validate_pattern(g.cp).empty());
}

TEST_CASE("construction identities on random specs") {
    for (int k = 0; k < 300; ++k) {
        GadgetSpec s = random_conv_spec();
        ConvGadgetCP g = construct_conventional(s);
        for (int side = 0; side < 2; ++side) {
            Point2 b = side == 0 ? g.b_l : g.b_r;
            Point2 d = side == 0 ? g.d_l : g.d_r;
            double beta = side == 0 ? s.beta_l : s.beta_r;
            // ||B C|| = 2 ||B D|| sin beta and the closed form for ||B D||.
            CHECK(dist(b, g.c) ==
                  doctest::Approx(2 * dist(b, d) * std::sin(beta)).epsilon(1e-9));
            CHECK(dist(b, d) == doctest::Approx(bd_length(s, side)).epsilon(1e-9));
            // angle A-B-D = pi - beta.
            CHECK(angle_at(b, g.a, d) == doctest::Approx(pi - beta).epsilon(1e-9));
            // m parallel to l, equidistant from B and C.
            const Ray2& m = side == 0 ? g.m_l : g.m_r;
            const Ray2& l = side == 0 ? g.l_l : g.l_r;
            CHECK(std::fabs(cross(m.dir, l.dir)) < 1e-9);
            CHECK(std::fabs(signed_dist(m.line(), b) + signed_dist(m.line(), g.c)) < 1e-9);
        }
    }
}

TEST_CASE("symmetric spec gives a mirror-symmetric pattern") {
    GadgetSpec s{deg2rad(100), deg2rad(80), deg2rad(80), 0, 0, 1.0};
    ConvGadgetCP g = construct_conventional(s);
    Line axis = Line::through(g.a, g.c);
    CHECK(dist(reflect_point(g.b_l, axis), g.b_r) < 1e-9);
    CHECK(dist(reflect_point(g.d_l, axis), g.d_r) < 1e-9);
}

TEST_CASE("random conventional gadgets validate cleanly") {
    for (int k = 0; k < 1000; ++k) {
        GadgetSpec s = random_conv_spec();
        ConvGadgetCP g = construct_conventional(s);
        auto diags = validate_pattern(g.cp);
        if (!diags.empty()) {
            CAPTURE(rad2deg(s.alpha));
            CAPTURE(rad2deg(s.beta_l));
            CAPTURE(rad2deg(s.beta_r));
            CAPTURE(diags[0].message);
        }
        CHECK(diags.empty());
    }
}
