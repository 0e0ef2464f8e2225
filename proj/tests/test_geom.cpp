#include <doctest.h>

#include "oriex/geom.hpp"
#include "test_util.hpp"

using namespace oriex;
using namespace oriex::testutil;

TEST_CASE("line intersections") {
    Line xaxis = Line::at({0, 0}, {1, 0});
    Line yaxis = Line::at({0, 0}, {0, 1});
    auto p = intersect_lines(xaxis, yaxis);
    REQUIRE(p);
    CHECK(dist(*p, {0, 0}) < 1e-15);

    Line y1 = Line::at({0, 1}, {1, 0});
    Line y2 = Line::at({0, 2}, {1, 0});
    CHECK(!intersect_lines(y1, y2));

    // y = x meets y = -x + 2 at (1,1).
    auto q = intersect_lines(Line::through({0, 0}, {1, 1}), Line::through({0, 2}, {2, 0}));
    REQUIRE(q);
    CHECK(dist(*q, {1, 1}) < 1e-12);
}

TEST_CASE("reflections") {
    Line diag = Line::through({0, 0}, {1, 1});
    Ray2 r{{0, 0}, {1, 0}};
    Ray2 im = reflect_ray(r, diag);
    CHECK(dist(im.origin, {0, 0}) < 1e-15);
    CHECK(norm(im.dir - Vec2{0, 1}) < 1e-15);

    Ray2 on_axis{{2, 2}, normalized({1, 1})};
    Ray2 same = reflect_ray(on_axis, diag);
    CHECK(dist(same.origin, on_axis.origin) < 1e-12);
    CHECK(norm(same.dir - on_axis.dir) < 1e-12);

    Ray2 up{{1, 0}, {0, 1}};
    Ray2 mir = reflect_ray(up, Line::at({0, 0}, {0, 1}));
    CHECK(dist(mir.origin, {-1, 0}) < 1e-12);
    CHECK(norm(mir.dir - Vec2{0, 1}) < 1e-12);
}

TEST_CASE("reflection is an involution on random rays") {
    for (int k = 0; k < 1000; ++k) {
        Ray2 r{{uniform(-5, 5), uniform(-5, 5)}, dir_of(uniform(0, 2 * pi))};
        Line axis = Line::at({uniform(-5, 5), uniform(-5, 5)}, dir_of(uniform(0, 2 * pi)));
        Ray2 back = reflect_ray(reflect_ray(r, axis), axis);
        CHECK(dist(back.origin, r.origin) < 1e-9);
        CHECK(norm(back.dir - r.dir) < 1e-9);
    }
}

TEST_CASE("circumcenter") {
    Point2 c = circumcenter({0, 0}, {2, 0}, {0, 2});
    CHECK(dist(c, {1, 1}) < 1e-12);
    CHECK_THROWS_AS(circumcenter({0, 0}, {1, 0}, {2, 0}), DomainError);
    Point2 q = circumcenter({0, 0}, {4, 0}, {1, 3});
    double r0 = dist(q, {0, 0});
    CHECK(std::fabs(dist(q, {4, 0}) - r0) < 1e-12);
    CHECK(std::fabs(dist(q, {1, 3}) - r0) < 1e-12);
}

TEST_CASE("circumcenter equidistance on random triangles") {
    for (int k = 0; k < 500; ++k) {
        Point2 a{uniform(-3, 3), uniform(-3, 3)};
        Point2 b{uniform(-3, 3), uniform(-3, 3)};
        Point2 c{uniform(-3, 3), uniform(-3, 3)};
        if (std::fabs(cross(b - a, c - a)) < 0.05) continue;
        Point2 o = circumcenter(a, b, c);
        double r = dist(o, a);
        CHECK(std::fabs(dist(o, b) - r) < 1e-9 * std::max(1.0, r));
        CHECK(std::fabs(dist(o, c) - r) < 1e-9 * std::max(1.0, r));
    }
}

TEST_CASE("intersection point lies on both lines") {
    for (int k = 0; k < 500; ++k) {
        Line l1 = Line::at({uniform(-3, 3), uniform(-3, 3)}, dir_of(uniform(0, 2 * pi)));
        Line l2 = Line::at({uniform(-3, 3), uniform(-3, 3)}, dir_of(uniform(0, 2 * pi)));
        auto p = intersect_lines(l1, l2);
        if (!p) continue;
        CHECK(std::fabs(cross(l1.d, *p - l1.p)) < 1e-7);
        CHECK(std::fabs(cross(l2.d, *p - l2.p)) < 1e-7);
    }
}

TEST_CASE("angle_at") {
    CHECK(angle_at({0, 0}, {1, 0}, {0, 1}) == doctest::Approx(pi / 2));
    CHECK(angle_at({0, 0}, {1, 0}, {1, 0}) == doctest::Approx(0.0));
    CHECK(angle_at({0, 0}, {1, 0}, {1, 1}) == doctest::Approx(pi / 4));
    CHECK_THROWS_AS(angle_at({0, 0}, {0, 0}, {1, 1}), DomainError);
}

TEST_CASE("angle normalization and pose") {
    CHECK(normalize_angle(3 * pi) == doctest::Approx(pi));
    CHECK(normalize_angle(-pi) == doctest::Approx(pi));
    Pose p{pi / 2, {1, 2}, false};
    Point2 q = p.apply({1, 0});
    CHECK(dist(q, {1, 3}) < 1e-12);
    Pose m{0, {0, 0}, true};
    CHECK(dist(m.apply({1, 2}), {1, -2}) < 1e-15);
}
