#ifndef ORIEX_GEOM_HPP
#define ORIEX_GEOM_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace oriex {

constexpr double pi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * pi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / pi; }

// Principal value in (-pi, pi].
inline double normalize_angle(double a) {
    a = std::fmod(a, 2.0 * pi);
    if (a <= -pi) a += 2.0 * pi;
    if (a > pi) a -= 2.0 * pi;
    return a;
}

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : Error {
    using Error::Error;
};
struct ConstructionError : Error {
    using Error::Error;
};
struct InfeasibleError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};
using Point2 = Vec2;

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
inline Vec2 operator-(Vec2 v) { return {-v.x, -v.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double dist(Point2 a, Point2 b) { return norm(b - a); }
inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

struct Tolerance {
    double eps_len = 1e-9;
    double eps_ang = 1e-9;
    static Tolerance for_scale(double characteristic_len) {
        return Tolerance{1e-9 * std::max(1.0, characteristic_len), 1e-9};
    }
};

Vec2 normalized(Vec2 v);
Vec2 dir_of(double angle);
double angle_of(Vec2 v);
Vec2 rotated(Vec2 v, double ang);

// Unsigned angle between two direction vectors, in [0, pi].
double angle_between(Vec2 a, Vec2 b);

// CCW angle from a to b in [0, 2pi).
double ccw_angle(Vec2 a, Vec2 b);

struct Line {
    Point2 p;
    Vec2 d;  // unit
    static Line through(Point2 a, Point2 b);
    static Line at(Point2 p, Vec2 dir);
};

struct Ray2 {
    Point2 origin;
    Vec2 dir;  // unit
    Line line() const { return Line::at(origin, dir); }
    Point2 at(double t) const { return origin + t * dir; }
};

Line perpendicular_at(const Line& l, Point2 through);
Line perpendicular_bisector(Point2 a, Point2 b);

std::optional<Point2> intersect_lines(const Line& a, const Line& b,
                                      const Tolerance& tol = {});

// Intersection parameters (ta, tb) with pa + ta*da = pb + tb*db; nullopt if parallel.
std::optional<std::pair<double, double>> intersect_params(Point2 pa, Vec2 da,
                                                          Point2 pb, Vec2 db,
                                                          const Tolerance& tol = {});

Point2 reflect_point(Point2 p, const Line& axis);
Vec2 reflect_dir(Vec2 v, const Line& axis);
Ray2 reflect_ray(const Ray2& r, const Line& axis);

// Circumcenter of a nondegenerate triangle; throws DomainError if collinear.
Point2 circumcenter(Point2 a, Point2 b, Point2 c, const Tolerance& tol = {});

// Unsigned angle p-vertex-q in [0, pi]; throws DomainError on coincident points.
double angle_at(Point2 vertex, Point2 p, Point2 q, const Tolerance& tol = {});

double signed_dist(const Line& l, Point2 p);  // positive on the left of d

// Rigid motion (optional mirror about the x axis applied first).
struct Pose {
    double rot = 0.0;
    Vec2 shift{0.0, 0.0};
    bool mirror = false;
    Point2 apply(Point2 p) const;
    Vec2 apply_dir(Vec2 v) const;
};

}  // namespace oriex

#endif
