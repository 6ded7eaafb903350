#pragma once

#include <cmath>
#include <stdexcept>

namespace fr {

// Absolute tolerance for point equality and collinearity predicates.
inline constexpr double kGeomEps = 1e-9;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline double sup_norm(Vec2 a) { return std::max(std::fabs(a.x), std::fabs(a.y)); }
inline double euclid_norm(Vec2 a) { return std::hypot(a.x, a.y); }

// CCW quarter turn.
inline Vec2 rot90ccw(Vec2 v) { return {-v.y, v.x}; }
// CW quarter turn.
inline Vec2 rot90cw(Vec2 v) { return {v.y, -v.x}; }

inline bool approx_eq(double a, double b, double tol = kGeomEps) {
    return std::fabs(a - b) <= tol;
}

inline bool approx_eq(Vec2 a, Vec2 b, double tol = kGeomEps) {
    return approx_eq(a.x, b.x, tol) && approx_eq(a.y, b.y, tol);
}

inline bool lex_less(Vec2 a, Vec2 b, double tol = kGeomEps) {
    if (a.x < b.x - tol) return true;
    if (a.x > b.x + tol) return false;
    return a.y < b.y - tol;
}

// Direction canonicalized to sup-norm 1.
inline Vec2 canonical_dir(Vec2 d) {
    double n = sup_norm(d);
    if (n <= 0.0) throw std::invalid_argument("zero direction");
    return {d.x / n, d.y / n};
}

inline bool same_dir(Vec2 a, Vec2 b, double tol = kGeomEps) {
    return std::fabs(cross(a, b)) <= tol * (sup_norm(a) * sup_norm(b) + 1.0) && dot(a, b) > 0.0;
}

inline double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

inline bool finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

}  // namespace fr
