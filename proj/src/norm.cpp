#include "fr/norm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fr {

PolygonalNorm::PolygonalNorm(std::vector<Vec2> unit_ball_vertices)
    : verts_(std::move(unit_ball_vertices)) {
    const size_t n = verts_.size();
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("unit ball needs an even vertex count >= 4");
    for (size_t i = 0; i < n; ++i) {
        Vec2 a = verts_[i];
        Vec2 b = verts_[(i + 1) % n];
        Vec2 c = verts_[(i + 2) % n];
        if (cross(b - a, c - b) <= kGeomEps)
            throw std::invalid_argument("unit ball vertices must be strictly convex CCW");
    }
    // Central symmetry: vertex i and i + n/2 must be opposite.
    for (size_t i = 0; i < n / 2; ++i) {
        if (!approx_eq(verts_[i], -verts_[i + n / 2], 1e-12))
            throw std::invalid_argument("unit ball must be centrally symmetric");
    }
    funcs_.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Vec2 a = verts_[i];
        Vec2 b = verts_[(i + 1) % n];
        Vec2 nrm = rot90cw(b - a);  // outward for CCW order
        double offset = dot(nrm, a);
        if (offset <= kGeomEps)
            throw std::invalid_argument("origin must be strictly inside the unit ball");
        funcs_.push_back({nrm.x / offset, nrm.y / offset});
    }
}

PolygonalNorm PolygonalNorm::sup() {
    return PolygonalNorm({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}});
}

PolygonalNorm PolygonalNorm::l1() {
    return PolygonalNorm({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
}

PolygonalNorm PolygonalNorm::euclid(int vertex_count) {
    if (vertex_count < 4 || vertex_count % 2 != 0)
        throw std::invalid_argument("euclid ball needs an even vertex count >= 4");
    std::vector<Vec2> v;
    v.reserve(static_cast<size_t>(vertex_count));
    for (int k = 0; k < vertex_count; ++k) {
        double a = 2.0 * M_PI * k / vertex_count;
        v.push_back({std::cos(a), std::sin(a)});
    }
    // Snap near-zero coordinates so axis-aligned vertices are exact.
    for (Vec2& p : v) {
        if (std::fabs(p.x) < 1e-15) p.x = 0.0;
        if (std::fabs(p.y) < 1e-15) p.y = 0.0;
    }
    return PolygonalNorm(std::move(v));
}

double PolygonalNorm::eval(Vec2 v) const {
    double m = 0.0;
    for (Vec2 f : funcs_) m = std::max(m, dot(f, v));
    return m;
}

double PolygonalNorm::support(Vec2 u) const {
    double m = -std::numeric_limits<double>::infinity();
    for (Vec2 k : verts_) m = std::max(m, dot(u, k));
    return m;
}

double PolygonalNorm::sup_norm_radius() const {
    double m = 0.0;
    for (Vec2 k : verts_) m = std::max(m, sup_norm(k));
    return m;
}

}  // namespace fr
