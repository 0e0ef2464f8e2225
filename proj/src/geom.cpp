#include "oriex/geom.hpp"

#include <algorithm>

namespace oriex {

Vec2 normalized(Vec2 v) {
    double n = norm(v);
    if (n == 0.0) throw DomainError("cannot normalize zero vector");
    return {v.x / n, v.y / n};
}

Vec2 dir_of(double angle) { return {std::cos(angle), std::sin(angle)}; }

double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

Vec2 rotated(Vec2 v, double ang) {
    double c = std::cos(ang), s = std::sin(ang);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

double angle_between(Vec2 a, Vec2 b) {
    return std::atan2(std::fabs(cross(a, b)), dot(a, b));
}

double ccw_angle(Vec2 a, Vec2 b) {
    double t = angle_of(b) - angle_of(a);
    t = std::fmod(t, 2.0 * pi);
    if (t < 0) t += 2.0 * pi;
    return t;
}

Line Line::through(Point2 a, Point2 b) { return Line{a, normalized(b - a)}; }
Line Line::at(Point2 p, Vec2 dir) { return Line{p, normalized(dir)}; }

Line perpendicular_at(const Line& l, Point2 through) {
    return Line{through, perp(l.d)};
}

Line perpendicular_bisector(Point2 a, Point2 b) {
    return Line{0.5 * (a + b), perp(normalized(b - a))};
}

std::optional<Point2> intersect_lines(const Line& a, const Line& b, const Tolerance& tol) {
    double den = cross(a.d, b.d);
    if (std::fabs(den) < tol.eps_ang) return std::nullopt;
    double t = cross(b.p - a.p, b.d) / den;
    return a.p + t * a.d;
}

std::optional<std::pair<double, double>> intersect_params(Point2 pa, Vec2 da, Point2 pb,
                                                          Vec2 db, const Tolerance& tol) {
    double den = cross(da, db);
    double scale = std::max(norm(da) * norm(db), 1e-300);
    if (std::fabs(den) < tol.eps_ang * scale) return std::nullopt;
    Vec2 w = pb - pa;
    double ta = cross(w, db) / den;
    double tb = cross(w, da) / den;
    return std::make_pair(ta, tb);
}

Point2 reflect_point(Point2 p, const Line& axis) {
    Vec2 w = p - axis.p;
    double along = dot(w, axis.d);
    Vec2 foot = axis.p + along * axis.d;
    return foot + (foot - p);
}

Vec2 reflect_dir(Vec2 v, const Line& axis) {
    double along = dot(v, axis.d);
    Vec2 para = along * axis.d;
    return para + (para - v);
}

Ray2 reflect_ray(const Ray2& r, const Line& axis) {
    return Ray2{reflect_point(r.origin, axis), reflect_dir(r.dir, axis)};
}

Point2 circumcenter(Point2 a, Point2 b, Point2 c, const Tolerance& tol) {
    double area2 = cross(b - a, c - a);
    if (std::fabs(area2) < tol.eps_len * tol.eps_len)
        throw DomainError("circumcenter: collinear points");
    double bb = dot(b - a, b - a);
    double cc = dot(c - a, c - a);
    double ux = (c.y - a.y) * bb - (b.y - a.y) * cc;
    double uy = (b.x - a.x) * cc - (c.x - a.x) * bb;
    return {a.x + ux / (2.0 * area2), a.y + uy / (2.0 * area2)};
}

double angle_at(Point2 vertex, Point2 p, Point2 q, const Tolerance& tol) {
    Vec2 u = p - vertex;
    Vec2 v = q - vertex;
    if (norm(u) < tol.eps_len || norm(v) < tol.eps_len)
        throw DomainError("angle_at: coincident points");
    return angle_between(u, v);
}

double signed_dist(const Line& l, Point2 p) { return cross(l.d, p - l.p); }

Point2 Pose::apply(Point2 p) const {
    if (mirror) p.y = -p.y;
    return rotated(p, rot) + shift;
}

Vec2 Pose::apply_dir(Vec2 v) const {
    if (mirror) v.y = -v.y;
    return rotated(v, rot);
}

}  // namespace oriex
