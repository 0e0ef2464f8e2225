#ifndef ORIEX_CP_HPP
#define ORIEX_CP_HPP

#include <optional>
#include <string>
#include <vector>

#include "oriex/geom.hpp"

namespace oriex {

enum class Fold { Mountain, Valley, Boundary, Flat };

enum class VertexClass { Interior, FoldedBoundary, SheetBoundary };

// Fold-region metadata attached to a vertex at construction time.
// For FoldedBoundary vertices with a target, the folded-region sectors are the
// ones swept counterclockwise from delim_a to delim_b; pos_ref (when set) marks
// the sector that counts positive in the alternating sum.
struct VertexInfo {
    VertexClass cls = VertexClass::FoldedBoundary;
    std::optional<double> target;
    std::optional<Vec2> delim_a;
    std::optional<Vec2> delim_b;
    std::optional<Vec2> pos_ref;
};

struct Crease {
    int a = -1;
    int b = -1;          // -1 for an unbounded crease (ray from a)
    Vec2 dir{0.0, 0.0};  // ray direction when b < 0
    Fold fold = Fold::Flat;
    std::string label;
    bool is_ray() const { return b < 0; }
};

struct Rect {
    Point2 lo;
    Point2 hi;
};

struct CreasePattern {
    std::vector<Point2> vertices;
    std::vector<VertexInfo> vinfo;
    std::vector<Crease> creases;
    std::optional<Rect> sheet;

    int add_vertex(Point2 p, VertexInfo info = {}, double merge_eps = 0.0);
    void add_segment(int a, int b, Fold f, std::string label = {});
    void add_ray(int a, Vec2 dir, Fold f, std::string label = {});
    // Consecutive collinear-or-not chain of segments through the given vertices.
    void add_chain(const std::vector<int>& vs, Fold f, const std::string& label = {});

    void transform(const Pose& pose);
    void merge(const CreasePattern& other, double merge_eps);

    Rect bounds() const;  // over finite vertices
};

struct IncidentCrease {
    int crease = -1;
    Vec2 dir{0.0, 0.0};  // unit, pointing away from the vertex
    Fold fold = Fold::Flat;
};
std::vector<IncidentCrease> incident_creases(const CreasePattern& cp, int v);

// Alternating sum of consecutive sector angles around an interior vertex,
// first sector (from the smallest-polar-angle crease) positive. Zero within
// tolerance iff locally flat-foldable. Throws Error if v is not Interior.
double kawasaki_defect(const CreasePattern& cp, int v, const Tolerance& tol = {});

// Alternating sum over the folded-region sectors minus `expected`.
// Sign convention: the sector containing the stored pos_ref counts positive
// when present, else the sector adjacent to delim_a. Throws if v lacks
// folded-boundary delimiters.
double boundary_defect(const CreasePattern& cp, int v, double expected,
                       const Tolerance& tol = {});

// (#mountain - #valley) at an interior vertex; throws on unassigned creases.
int maekawa_check(const CreasePattern& cp, int v);

struct Diagnostic {
    enum Kind {
        Crossing,
        Overlap,
        VertexOnCrease,
        KawasakiViolation,
        BoundaryViolation,
        MaekawaViolation,
        UnassignedCrease,
        BadCrease,
    } kind;
    std::string message;
};

std::vector<Diagnostic> validate_pattern(const CreasePattern& cp, const Tolerance& tol = {});

const char* fold_letter(Fold f);

}  // namespace oriex

#endif
