#ifndef ORIEX_TEST_UTIL_HPP
#define ORIEX_TEST_UTIL_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "oriex/gadget.hpp"
#include "oriex/interference.hpp"

namespace oriex::testutil {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

inline double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng());
}

inline int uniform_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng());
}

// Valid conventional-gadget spec (delta = 0), sampled via the gamma form.
inline GadgetSpec random_conv_spec(double margin = 0.02) {
    for (;;) {
        double g = uniform(margin, pi - margin);
        double bl = uniform(margin, pi - g / 2 - margin);
        double br = uniform(margin, pi - g / 2 - margin);
        if (bl + br + g / 2 <= pi + margin) continue;
        GadgetSpec s{2 * pi - g - bl - br, bl, br, 0.0, 0.0, 1.0};
        if (validate_conv(s).empty()) return s;
    }
}

// Valid new-gadget spec; delta_max > 0 allows pleat-angle changes.
inline GadgetSpec random_new_spec(double delta_max = 0.0, double margin = 0.02) {
    for (;;) {
        double g = uniform(margin, pi - margin);
        double dl = delta_max > 0 ? uniform(0.0, delta_max) : 0.0;
        double dr = delta_max > 0 ? uniform(0.0, delta_max) : 0.0;
        if (g + dl + dr >= pi - margin) continue;
        GammaSplit gs;
        try {
            gs = gamma_split(g, dl, dr);
        } catch (const DomainError&) {
            continue;
        }
        double bl = pi / 2 - gs.gamma_l / 2 + uniform(0.002, pi / 2 - margin);
        double br = pi / 2 - gs.gamma_r / 2 + uniform(0.002, pi / 2 - margin);
        GadgetSpec s{2 * pi - g - bl - br, bl, br, dl, dr, 1.0};
        if (validate_new(s).empty()) return s;
    }
}

// Random strictly convex CCW polygon with n vertices on a loose circle.
inline std::vector<Point2> random_convex_polygon(int n, double rlo = 0.7, double rhi = 1.3) {
    for (;;) {
        std::vector<double> angs(n);
        for (auto& a : angs) a = uniform(0.0, 2 * pi);
        std::sort(angs.begin(), angs.end());
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            double gap = angs[(i + 1) % n] - angs[i];
            if (i + 1 == n) gap += 2 * pi;
            if (gap < 0.15 || gap > 2.7) ok = false;
        }
        if (!ok) continue;
        std::vector<Point2> p(n);
        for (int i = 0; i < n; ++i) p[i] = uniform(rlo, rhi) * dir_of(angs[i]);
        for (int i = 0; i < n; ++i) {
            Point2 a = p[i], b = p[(i + 1) % n], c = p[(i + 2) % n];
            if (cross(b - a, c - b) < 0.02) ok = false;
        }
        if (ok) return p;
    }
}

inline PolyhedronSpec random_prism(int nlo = 3, int nhi = 8) {
    PolyhedronSpec s;
    s.base = random_convex_polygon(uniform_int(nlo, nhi));
    s.angles.assign(s.base.size(), {});
    s.height = 0.0;
    return s;
}

// Random polyhedron with general beta angles satisfying conditions (i), (ii);
// the per-vertex data need not assemble into planar side faces.
inline PolyhedronSpec random_polyhedron(int nlo = 3, int nhi = 7) {
    for (;;) {
        PolyhedronSpec s;
        s.base = random_convex_polygon(uniform_int(nlo, nhi));
        s.angles.resize(s.base.size());
        bool ok = true;
        for (int i = 0; i < s.n(); ++i) {
            double a = s.alpha(i);
            double spread = std::min(a / 2 - 0.02, 0.5);
            if (spread <= 0.03) {
                ok = false;
                break;
            }
            s.angles[i].beta_l = pi / 2 + uniform(-spread, spread);
            s.angles[i].beta_r = pi / 2 + uniform(-spread, spread);
        }
        if (!ok) continue;
        if (!validate_polyhedron(s).empty()) continue;
        bool conv_ok = true;
        for (int i = 0; i < s.n(); ++i)
            if (!validate_conv(s.gadget(i)).empty()) conv_ok = false;
        if (conv_ok) return s;
    }
}

// Geometrically consistent frustum: the top polygon is built from the base
// edge lines shifted in or out, so every side face is a planar trapezoid.
// Beta angles are derived from the actual 3D ridges.
inline PolyhedronSpec random_frustum(int nlo = 3, int nhi = 7, double max_tilt = 0.35) {
    for (;;) {
        std::vector<Point2> base = random_convex_polygon(uniform_int(nlo, nhi));
        int n = static_cast<int>(base.size());
        double h0 = uniform(0.4, 1.2);
        std::vector<Line> lines;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            Point2 a = base[i], b = base[(i + 1) % n];
            Vec2 e = normalized(b - a);
            double off = uniform(-max_tilt, max_tilt) * h0;
            lines.push_back(Line::at(a + off * perp(e), e));
        }
        std::vector<Point2> top(n);
        for (int i = 0; i < n; ++i) {
            auto p = intersect_lines(lines[(i + n - 1) % n], lines[i]);
            if (!p) ok = false;
            else top[i] = *p;
        }
        if (!ok) continue;
        PolyhedronSpec s;
        s.base = base;
        s.angles.resize(n);
        for (int i = 0; i < n; ++i) {
            Vec2 rh = top[i] - base[i];  // ridge top-view offset
            double rlen = std::hypot(norm(rh), h0);
            Vec2 e_next = normalized(base[(i + 1) % n] - base[i]);
            Vec2 e_prev = normalized(base[(i + n - 1) % n] - base[i]);
            double cr = dot(rh, e_next) / rlen;
            double cl = dot(rh, e_prev) / rlen;
            s.angles[i].beta_r = pi - std::acos(std::clamp(cr, -1.0, 1.0));
            s.angles[i].beta_l = pi - std::acos(std::clamp(cl, -1.0, 1.0));
        }
        if (!validate_polyhedron(s).empty()) continue;
        bool conv_ok = true;
        for (int i = 0; i < s.n(); ++i)
            if (!validate_conv(s.gadget(i)).empty()) conv_ok = false;
        if (!conv_ok) continue;
        return s;
    }
}

}  // namespace oriex::testutil

#endif
