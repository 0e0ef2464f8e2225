#include <doctest.h>

#include "oriex/io.hpp"
#include "oriex/layout.hpp"
#include "test_util.hpp"

using namespace oriex;
using namespace oriex::testutil;

namespace {

PolyhedronSpec unit_square(double h = 0.0) {
    PolyhedronSpec s;
    s.base = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    s.angles.assign(4, {});
    s.height = h;
    return s;
}

}  // namespace

TEST_CASE("cube development, both families") {
    LayoutOptions conv;
    conv.family = Family::Conventional;
    PolyhedronSpec s = unit_square(1.0);
    Development dc = develop(s, conv);
    CHECK(validate_pattern(dc.cp).empty());
    // Adjacent pyramids exactly touch: h kappa_conv = 1 on every edge.
    int saturated = 0;
    for (auto& w : dc.warnings)
        saturated += w.find("saturated") != std::string::npos;
    CHECK(saturated == 4);

    Development dn = develop(unit_square(1.0));
    CHECK(validate_pattern(dn.cp).empty());
    CHECK(dn.height == doctest::Approx(1.0));

    // Angle closure around each top corner.
    for (int i = 0; i < 4; ++i) {
        double total = dn.spec.alpha(i) + dn.spec.ang(i).beta_l + dn.spec.ang(i).beta_r +
                       dn.spec.gamma(i);
        CHECK(total == doctest::Approx(2 * pi).epsilon(1e-12));
    }
}

TEST_CASE("max-height square prism saturates every edge") {
    Development d = develop(unit_square(0.0));
    CHECK(d.height == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(validate_pattern(d.cp).empty());
    int saturated = 0;
    for (auto& w : d.warnings) saturated += w.find("saturated") != std::string::npos;
    CHECK(saturated == 4);
    // Above the maximum the layout refuses.
    CHECK_THROWS_AS(develop(unit_square(1.5)), InfeasibleError);
}

TEST_CASE("development works on random frusta and prisms") {
    int done = 0;
    for (int k = 0; k < 60 && done < 40; ++k) {
        PolyhedronSpec s = (k % 2) ? random_prism() : random_frustum();
        InterferenceReport rep = solve_heights(s);
        s.height = 0.6 * std::min(rep.h_conv, rep.h_max == rep.h_conv ? rep.h_conv
                                                                      : rep.h_conv);
        LayoutOptions lo;
        lo.family = Family::Conventional;
        Development dc = develop(s, lo);
        auto diags = validate_pattern(dc.cp);
        if (!diags.empty()) CAPTURE(diags[0].message);
        CHECK(diags.empty());

        bool new_ok = true;
        for (int i = 0; i < s.n(); ++i)
            if (!validate_new(s.gadget(i)).empty()) new_ok = false;
        if (new_ok) {
            lo.family = Family::New;
            s.height = 0.6 * std::min(rep.h_new, rep.h_max);
            Development dn = develop(s, lo);
            auto diags2 = validate_pattern(dn.cp);
            if (!diags2.empty()) CAPTURE(diags2[0].message);
            CHECK(diags2.empty());
        }
        ++done;
    }
    CHECK(done == 40);
}

TEST_CASE("development with divisions (tall square prisms)") {
    // 1 x 1 x 5 prism with d = 2, p = (2/5, 8/5), then d = 3, p = (3/5, 6/5, 6/5).
    PolyhedronSpec s = unit_square(5.0);
    LayoutOptions lo;
    lo.plan = DivisionPlan::of({2.0 / 5, 8.0 / 5});
    Development d2 = develop(s, lo);
    CHECK(validate_pattern(d2.cp).empty());
    lo.plan = DivisionPlan::of({3.0 / 5, 6.0 / 5, 6.0 / 5});
    Development d3 = develop(s, lo);
    CHECK(validate_pattern(d3.cp).empty());
    // Lowest level exactly saturates: (p1/d) h kappa_new = 1.
    CHECK((2.0 / 5 / 2) * 5.0 * kappa_edge_new(s, 0) == doctest::Approx(std::sqrt(2.0) / 2));
    // Without division the height is infeasible.
    CHECK_THROWS_AS(develop(s, LayoutOptions{}), InfeasibleError);
}

TEST_CASE("sharp square pyramid needs repetition") {
    PolyhedronSpec s = unit_square(0.0);
    for (auto& a : s.angles) a = {deg2rad(95), deg2rad(95), 0, 0};
    double apex = s.lambda(0) * 0.5 / std::sin(deg2rad(5));
    s.height = apex;
    CHECK_THROWS_AS(develop(s, LayoutOptions{}), InfeasibleError);
    LayoutOptions lo;
    lo.plan = DivisionPlan::equal(4);
    Development d = develop(s, lo);
    CHECK(validate_pattern(d.cp).empty());
    // All four top corners land on the apex point.
    for (int i = 1; i < 4; ++i) CHECK(dist(d.top[0], d.top[i]) < 1e-9);
}

TEST_CASE("hexagonal prism from a triangular prism with inserted faces") {
    PolyhedronSpec tri;
    tri.base = {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
    tri.angles.assign(3, {});
    tri.height = 0.5;
    Development d = develop_inserted_prism(tri, {1.0, 1.0, 1.0});
    auto diags = validate_pattern(d.cp);
    if (!diags.empty()) CAPTURE(diags[0].message);
    CHECK(diags.empty());
    // Unequal widths do not close around the triangle.
    CHECK_THROWS_AS(develop_inserted_prism(tri, {1.0, 0.5, 1.0}), InfeasibleError);
}

TEST_CASE("spec document round trip") {
    std::string text = R"({
      "version": 1,
      "units": "degrees",
      "base": [[0,0],[1,0],[1,1],[0,1]],
      "vertices": {"beta_l": 90, "beta_r": 90},
      "height": "max",
      "family": "new"
    })";
    SpecDocument doc = parse_spec(text);
    CHECK(doc.poly.n() == 4);
    CHECK(doc.height_max);
    std::string emitted = emit_spec(doc);
    SpecDocument again = parse_spec(emitted);
    CHECK(again.poly.n() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(dist(again.poly.base[i], doc.poly.base[i]) < 1e-12);
        CHECK(again.poly.angles[i].beta_l == doctest::Approx(doc.poly.angles[i].beta_l));
    }
    CHECK(emit_spec(again) == emitted);

    CHECK_THROWS_AS(parse_spec("{"), ParseError);
    CHECK_THROWS_AS(parse_spec(R"({"version": 2})"), ParseError);
    CHECK_THROWS_AS(parse_spec(R"({"version":1,"base":[[0,0],[1,0]],"vertices":{}})"),
                    ParseError);
}

TEST_CASE("fold export, schema and round trip") {
    Development d = develop(unit_square(1.0));
    std::string fold = emit_fold(d.cp);
    CHECK(validate_fold_text(fold).empty());
    CreasePattern cp = parse_fold(fold);
    CHECK(validate_pattern(cp).empty());
    // Emitting the parsed pattern reproduces the file byte for byte.
    std::string again = emit_fold(cp);
    CHECK(again == fold);
    // Determinism.
    Development d2 = develop(unit_square(1.0));
    CHECK(emit_fold(d2.cp) == fold);

    // Empty pattern.
    CreasePattern empty;
    std::string ef = emit_fold(empty);
    CHECK(validate_fold_text(ef).empty());

    auto errs = validate_fold_text(R"({"vertices_coords": [[0,0]]})");
    CHECK(!errs.empty());
}

TEST_CASE("svg export is deterministic and styled") {
    Development d = develop(unit_square(1.0));
    std::string svg = emit_svg(d.cp);
    CHECK(svg == emit_svg(d.cp));
    CHECK(svg.find("#d40000") != std::string::npos);
    CHECK(svg.find("#0044cc") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    SvgStyle st;
    st.mountain = "#111111";
    st.dash_valley = false;
    std::string svg2 = emit_svg(d.cp, st);
    CHECK(svg2.find("#111111") != std::string::npos);
    CHECK(svg2.find("stroke-dasharray") == std::string::npos);
}

TEST_CASE("verification catches a perturbed pattern") {
    Development d = develop(unit_square(1.0));
    std::string fold = emit_fold(d.cp);
    CreasePattern cp = parse_fold(fold);
    REQUIRE(validate_pattern(cp).empty());
    // Nudge one interior vertex.
    for (size_t v = 0; v < cp.vertices.size(); ++v) {
        if (cp.vinfo[v].cls != VertexClass::Interior) continue;
        cp.vertices[v].x += 1e-3;
        break;
    }
    CHECK(!validate_pattern(cp).empty());
}
