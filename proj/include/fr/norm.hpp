#pragma once

#include <vector>

#include "fr/vec2.hpp"

namespace fr {

// A norm given by its unit ball: a centrally symmetric convex polygon with
// the origin strictly inside. The norm itself is the gauge function of the
// ball, evaluated through precomputed edge functionals so that boundary
// points get value exactly 1.
class PolygonalNorm {
public:
    // Vertices must be in strictly convex counterclockwise position and
    // centrally symmetric (v is a vertex iff -v is).
    explicit PolygonalNorm(std::vector<Vec2> unit_ball_vertices);

    // sup-norm: square ball with vertices (+-1, +-1).
    static PolygonalNorm sup();
    // l1 norm: diamond ball.
    static PolygonalNorm l1();
    // Regular 2m-gon approximation of the Euclidean norm, vertex at (1,0).
    // Relative error on radii is bounded by 1 - cos(pi/(2m) * 2) ... i.e.
    // 1 - cos(pi/m) for the inscribed polygon with 2m vertices.
    static PolygonalNorm euclid(int vertex_count = 64);

    const std::vector<Vec2>& unit_ball_vertices() const { return verts_; }

    // Gauge of v: 0 at origin, exactly 1 on the ball boundary.
    double eval(Vec2 v) const;

    // Support function of the unit ball: max over ball of dot(u, k).
    double support(Vec2 u) const;

    // Outward edge normals of the unit ball (unnormalized gauge functionals
    // n_i with dot(n_i, x) == 1 on edge i). Useful as an exhaustive set of
    // candidate directions for support-function extrema.
    const std::vector<Vec2>& edge_functionals() const { return funcs_; }

    // max over the ball of the sup-norm; converts grid steps into gauge
    // error bounds.
    double sup_norm_radius() const;

private:
    std::vector<Vec2> verts_;
    std::vector<Vec2> funcs_;
};

}  // namespace fr
