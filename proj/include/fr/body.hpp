#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fr/hausdorff_value.hpp"
#include "fr/norm.hpp"
#include "fr/vec2.hpp"

namespace fr {

// Closed convex polyhedral subsets of the plane, possibly unbounded and
// possibly degenerate. The represented set is conv(verts) + cone(rays);
// line-containing sets get dedicated kinds because they have no extreme
// points.
enum class BodyKind {
    Empty,
    Point,      // verts = {p}
    Segment,    // verts = {a, b}
    Ray,        // verts = {p}, rays = {d}: p + t d, t >= 0
    Line,       // verts = {p}, rays = {d, -d}
    Polygon,    // verts CCW, bounded
    Wedge,      // unbounded, line-free, full or chain boundary:
                //   rays = {r_in, r_out}; boundary arrives from infinity
                //   along r_in into verts.front(), walks the CCW chain,
                //   and leaves verts.back() along r_out. Interior on the
                //   left. r_in may equal r_out (single recession ray).
    Strip,      // verts = {p0, p1} on the two boundary lines, rays = {d}
    Halfplane,  // verts = {p} on the boundary, rays = {d}; interior is the
                // left side of d
    Plane,
};

struct Halfspace {
    Vec2 n;    // outward normal
    double c;  // the set is {x : dot(n, x) <= c}
};

class ConvexBody2 {
public:
    ConvexBody2() = default;  // empty

    static ConvexBody2 empty();
    static ConvexBody2 point(Vec2 p);
    static ConvexBody2 segment(Vec2 a, Vec2 b);
    static ConvexBody2 ray(Vec2 p, Vec2 d);
    static ConvexBody2 line(Vec2 p, Vec2 d);
    static ConvexBody2 polygon(std::vector<Vec2> ccw_verts);
    // Hull of arbitrary points (dedupes, handles collinear input).
    static ConvexBody2 hull_of(const std::vector<Vec2>& pts);
    static ConvexBody2 wedge(std::vector<Vec2> chain, Vec2 r_in, Vec2 r_out);
    static ConvexBody2 strip(Vec2 p0, Vec2 p1, Vec2 d);
    // Halfplane {x : dot(n, x) <= c}.
    static ConvexBody2 halfplane(Vec2 n, double c);
    static ConvexBody2 plane();
    // Axis-aligned box [x0,x1] x [y0,y1].
    static ConvexBody2 box(double x0, double y0, double x1, double y1);

    BodyKind kind() const { return kind_; }
    bool is_empty() const { return kind_ == BodyKind::Empty; }
    bool is_bounded() const;
    const std::vector<Vec2>& verts() const { return verts_; }
    const std::vector<Vec2>& rays() const { return rays_; }

    // H-representation; empty list for the whole plane. Lower-dimensional
    // kinds are described by opposite halfspace pairs.
    std::vector<Halfspace> halfspaces() const;

    // Outward normals of all faces (including the normals bounding the
    // support-finiteness cone for unbounded bodies).
    std::vector<Vec2> face_normals() const;

    // Support function: max over the set of dot(u, x); nullopt when
    // unbounded in direction u.
    std::optional<double> support(Vec2 u) const;

    bool contains(Vec2 p, double tol = kGeomEps) const;

    // Validates the representation invariants (orientation, strict
    // convexity of chains, ray normalization); throws on failure.
    void validate() const;

    std::string kind_name() const;

    friend bool operator==(const ConvexBody2& a, const ConvexBody2& b);

private:
    BodyKind kind_ = BodyKind::Empty;
    std::vector<Vec2> verts_;
    std::vector<Vec2> rays_;
};

// Recession cone of a body, canonicalized.
struct RecessionCone {
    enum class Type { Zero, Ray, Pointed, Line, Halfplane, Plane };
    Type type = Type::Zero;
    std::vector<Vec2> dirs;  // extreme directions, sup-norm 1, sorted by angle
    Vec2 orient{0, 0};       // for Halfplane type: the inward middle direction

    friend bool operator==(const RecessionCone& a, const RecessionCone& b);
};

RecessionCone recession_cone(const ConvexBody2& a);

// Clip a body by a halfspace. Exact up to the geometric tolerance.
ConvexBody2 clip(const ConvexBody2& a, const Halfspace& h);

// Exact intersection (possibly empty, possibly degenerate).
ConvexBody2 intersect(const ConvexBody2& a, const ConvexBody2& b);

// Closed r-neighborhood of A under N: the Minkowski sum of A with the
// r-scaled unit ball. Recession rays are unchanged.
ConvexBody2 minkowski_neighborhood(const ConvexBody2& a, const PolygonalNorm& n, double r);

// inf over A of the gauge of (p - a); Infinite for empty A.
HausdorffValue dist_point_body(Vec2 p, const ConvexBody2& a, const PolygonalNorm& n);

// Hausdorff distance under N. Infinite exactly when the recession cones
// differ (exact for polyhedral convex sets in the plane).
HausdorffValue hausdorff_bodies(const ConvexBody2& a, const ConvexBody2& b,
                                const PolygonalNorm& n);

// inf over a in A, b in B of gauge(a - b); 0 when the bodies meet.
double body_separation(const ConvexBody2& a, const ConvexBody2& b, const PolygonalNorm& n);

// Representational equality after canonicalization, within tolerance.
bool bodies_equal(const ConvexBody2& a, const ConvexBody2& b, double tol = kGeomEps);

// Evenly spaced points along the boundary (bounded bodies only).
std::vector<Vec2> boundary_samples(const ConvexBody2& a, int count);

// A point in the relative interior (bounded bodies of dimension >= 0).
Vec2 interior_point(const ConvexBody2& a);

struct InteriorNeighborhoodReport {
    bool pass = false;
    double max_boundary_error = 0.0;  // max |dist - r| over boundary samples
    double max_interior_dist = 0.0;   // max dist over interior samples (< r expected)
};

// Checks that the open r-neighborhood is the interior of the closed one:
// boundary samples of minkowski_neighborhood(A, N, r) sit at distance r
// from A and interior samples sit strictly below r.
InteriorNeighborhoodReport is_interior_equal_open_nbhd(const ConvexBody2& a,
                                                       const PolygonalNorm& n, double r,
                                                       int boundary_sample_count,
                                                       double tol = 1e-7);

}  // namespace fr
