#include "fr/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fr {
namespace {

double scale_of(const std::vector<Vec2>& pts) {
    double s = 1.0;
    for (Vec2 p : pts) s = std::max(s, sup_norm(p));
    return s;
}

// Strictly convex left turn test with tolerance scaled to the operands.
double turn(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - b); }

std::vector<Vec2> dedupe(std::vector<Vec2> pts, double tol) {
    std::vector<Vec2> out;
    for (Vec2 p : pts) {
        bool dup = false;
        for (Vec2 q : out)
            if (approx_eq(p, q, tol)) { dup = true; break; }
        if (!dup) out.push_back(p);
    }
    return out;
}

// Monotone chain; returns CCW hull. Collinear points are dropped. For
// degenerate inputs returns 1 or 2 extreme points.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts, double tol) {
    pts = dedupe(std::move(pts), tol);
    if (pts.size() <= 2) return pts;
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    const double cr_tol = tol * scale_of(pts);
    std::vector<Vec2> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && turn(h[k - 2], h[k - 1], pts[i]) <= cr_tol) --k;
        h[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && turn(h[k - 2], h[k - 1], pts[i]) <= cr_tol) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() == 2 && approx_eq(h[0], h[1], tol)) h.resize(1);
    return h;
}

// CCW angular arc on the direction circle, length in [0, pi].
struct Arc {
    double start = 0.0;
    double len = 0.0;
};

constexpr double kAngEps = 1e-9;

std::optional<Arc> arc_intersect(Arc a, Arc b) {
    auto overlap = [&](double bs) -> std::optional<Arc> {
        double lo = std::max(a.start, bs);
        double hi = std::min(a.start + a.len, bs + b.len);
        if (hi >= lo - kAngEps) return Arc{lo, std::max(0.0, hi - lo)};
        return std::nullopt;
    };
    double s = b.start;
    while (s < a.start - kAngEps) s += 2.0 * M_PI;
    while (s >= a.start + 2.0 * M_PI - kAngEps) s -= 2.0 * M_PI;
    if (auto r = overlap(s)) return r;
    if (auto r = overlap(s - 2.0 * M_PI)) return r;
    return std::nullopt;
}

Vec2 dir_of_angle(double a, const std::vector<Vec2>& snap) {
    for (Vec2 c : snap) {
        double da = std::remainder(angle_of(c) - a, 2.0 * M_PI);
        if (std::fabs(da) <= kAngEps) return canonical_dir(c);
    }
    return canonical_dir({std::cos(a), std::sin(a)});
}

double signed_value(const Halfspace& h, Vec2 p) { return dot(h.n, p) - h.c; }

}  // namespace

// ---------------------------------------------------------------------------
// Constructors and canonical forms

ConvexBody2 ConvexBody2::empty() { return ConvexBody2{}; }

ConvexBody2 ConvexBody2::point(Vec2 p) {
    ConvexBody2 b;
    b.kind_ = BodyKind::Point;
    b.verts_ = {p};
    return b;
}

ConvexBody2 ConvexBody2::segment(Vec2 a, Vec2 b2) {
    if (approx_eq(a, b2)) return point(a);
    ConvexBody2 b;
    b.kind_ = BodyKind::Segment;
    b.verts_ = lex_less(a, b2) ? std::vector<Vec2>{a, b2} : std::vector<Vec2>{b2, a};
    return b;
}

ConvexBody2 ConvexBody2::ray(Vec2 p, Vec2 d) {
    ConvexBody2 b;
    b.kind_ = BodyKind::Ray;
    b.verts_ = {p};
    b.rays_ = {canonical_dir(d)};
    return b;
}

static Vec2 canonical_line_dir(Vec2 d) {
    d = canonical_dir(d);
    if (d.y < -kGeomEps || (std::fabs(d.y) <= kGeomEps && d.x < 0.0)) d = -d;
    return d;
}

static Vec2 project_origin(Vec2 p, Vec2 d) {
    double n2 = dot(d, d);
    return p - (dot(p, d) / n2) * d;
}

ConvexBody2 ConvexBody2::line(Vec2 p, Vec2 d) {
    Vec2 cd = canonical_line_dir(d);
    ConvexBody2 b;
    b.kind_ = BodyKind::Line;
    b.verts_ = {project_origin(p, cd)};
    b.rays_ = {cd, -cd};
    return b;
}

ConvexBody2 ConvexBody2::polygon(std::vector<Vec2> ccw_verts) {
    if (ccw_verts.size() < 3) throw std::invalid_argument("polygon needs >= 3 vertices");
    ConvexBody2 b;
    b.kind_ = BodyKind::Polygon;
    // rotate so the lexicographically smallest vertex comes first
    size_t best = 0;
    for (size_t i = 1; i < ccw_verts.size(); ++i)
        if (lex_less(ccw_verts[i], ccw_verts[best])) best = i;
    std::rotate(ccw_verts.begin(), ccw_verts.begin() + static_cast<long>(best),
                ccw_verts.end());
    b.verts_ = std::move(ccw_verts);
    b.validate();
    return b;
}

ConvexBody2 ConvexBody2::hull_of(const std::vector<Vec2>& pts) {
    std::vector<Vec2> h = convex_hull(pts, kGeomEps);
    if (h.empty()) return empty();
    if (h.size() == 1) return point(h[0]);
    if (h.size() == 2) return segment(h[0], h[1]);
    return polygon(std::move(h));
}

ConvexBody2 ConvexBody2::wedge(std::vector<Vec2> chain, Vec2 r_in, Vec2 r_out) {
    if (chain.empty()) throw std::invalid_argument("wedge needs a vertex chain");
    ConvexBody2 b;
    b.kind_ = BodyKind::Wedge;
    b.verts_ = std::move(chain);
    b.rays_ = {canonical_dir(r_in), canonical_dir(r_out)};
    b.validate();
    return b;
}

ConvexBody2 ConvexBody2::strip(Vec2 p0, Vec2 p1, Vec2 d) {
    Vec2 cd = canonical_line_dir(d);
    Vec2 q0 = project_origin(p0, cd);
    Vec2 q1 = project_origin(p1, cd);
    if (approx_eq(q0, q1)) return line(p0, cd);
    ConvexBody2 b;
    b.kind_ = BodyKind::Strip;
    b.verts_ = lex_less(q0, q1) ? std::vector<Vec2>{q0, q1} : std::vector<Vec2>{q1, q0};
    b.rays_ = {cd};
    return b;
}

ConvexBody2 ConvexBody2::halfplane(Vec2 n, double c) {
    double n2 = dot(n, n);
    if (n2 <= 0.0) throw std::invalid_argument("halfplane needs a nonzero normal");
    ConvexBody2 b;
    b.kind_ = BodyKind::Halfplane;
    b.verts_ = {(c / n2) * n};
    b.rays_ = {canonical_dir(rot90ccw(n))};
    return b;
}

ConvexBody2 ConvexBody2::plane() {
    ConvexBody2 b;
    b.kind_ = BodyKind::Plane;
    return b;
}

ConvexBody2 ConvexBody2::box(double x0, double y0, double x1, double y1) {
    return polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

bool ConvexBody2::is_bounded() const {
    switch (kind_) {
        case BodyKind::Empty:
        case BodyKind::Point:
        case BodyKind::Segment:
        case BodyKind::Polygon:
            return true;
        default:
            return false;
    }
}

std::string ConvexBody2::kind_name() const {
    switch (kind_) {
        case BodyKind::Empty: return "empty";
        case BodyKind::Point: return "point";
        case BodyKind::Segment: return "segment";
        case BodyKind::Ray: return "ray";
        case BodyKind::Line: return "line";
        case BodyKind::Polygon: return "polygon";
        case BodyKind::Wedge: return "wedge";
        case BodyKind::Strip: return "strip";
        case BodyKind::Halfplane: return "halfplane";
        case BodyKind::Plane: return "plane";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// H-representation

std::vector<Halfspace> ConvexBody2::halfspaces() const {
    std::vector<Halfspace> hs;
    auto edge = [&](Vec2 a, Vec2 b) {
        Vec2 n = rot90cw(b - a);
        hs.push_back({n, dot(n, a)});
    };
    switch (kind_) {
        case BodyKind::Empty:
            throw std::logic_error("halfspaces() on empty body");
        case BodyKind::Plane:
            break;
        case BodyKind::Point: {
            Vec2 p = verts_[0];
            hs.push_back({{1, 0}, p.x});
            hs.push_back({{-1, 0}, -p.x});
            hs.push_back({{0, 1}, p.y});
            hs.push_back({{0, -1}, -p.y});
            break;
        }
        case BodyKind::Segment: {
            Vec2 a = verts_[0], b = verts_[1];
            Vec2 d = b - a;
            Vec2 n = rot90cw(d);
            hs.push_back({n, dot(n, a)});
            hs.push_back({-n, dot(-n, a)});
            hs.push_back({-d, dot(-d, a)});
            hs.push_back({d, dot(d, b)});
            break;
        }
        case BodyKind::Ray: {
            Vec2 p = verts_[0], d = rays_[0];
            Vec2 n = rot90cw(d);
            hs.push_back({n, dot(n, p)});
            hs.push_back({-n, dot(-n, p)});
            hs.push_back({-d, dot(-d, p)});
            break;
        }
        case BodyKind::Line: {
            Vec2 p = verts_[0];
            Vec2 n = rot90cw(rays_[0]);
            hs.push_back({n, dot(n, p)});
            hs.push_back({-n, dot(-n, p)});
            break;
        }
        case BodyKind::Polygon:
            for (size_t i = 0; i < verts_.size(); ++i)
                edge(verts_[i], verts_[(i + 1) % verts_.size()]);
            break;
        case BodyKind::Wedge: {
            Vec2 n_in = rot90ccw(rays_[0]);
            hs.push_back({n_in, dot(n_in, verts_.front())});
            for (size_t i = 0; i + 1 < verts_.size(); ++i) edge(verts_[i], verts_[i + 1]);
            Vec2 n_out = rot90cw(rays_[1]);
            hs.push_back({n_out, dot(n_out, verts_.back())});
            break;
        }
        case BodyKind::Strip: {
            Vec2 n = rot90cw(rays_[0]);
            double c0 = dot(n, verts_[0]);
            double c1 = dot(n, verts_[1]);
            hs.push_back({n, std::max(c0, c1)});
            hs.push_back({-n, -std::min(c0, c1)});
            break;
        }
        case BodyKind::Halfplane: {
            Vec2 n = rot90cw(rays_[0]);
            hs.push_back({n, dot(n, verts_[0])});
            break;
        }
    }
    return hs;
}

std::vector<Vec2> ConvexBody2::face_normals() const {
    std::vector<Vec2> out;
    if (kind_ == BodyKind::Empty || kind_ == BodyKind::Plane) return out;
    for (const Halfspace& h : halfspaces()) {
        double l = euclid_norm(h.n);
        if (l > 0) out.push_back({h.n.x / l, h.n.y / l});
    }
    return out;
}

std::optional<double> ConvexBody2::support(Vec2 u) const {
    const double tol = kGeomEps * (1.0 + sup_norm(u));
    auto vmax = [&] {
        double m = -std::numeric_limits<double>::infinity();
        for (Vec2 v : verts_) m = std::max(m, dot(u, v));
        return m;
    };
    switch (kind_) {
        case BodyKind::Empty:
            throw std::logic_error("support() on empty body");
        case BodyKind::Point:
        case BodyKind::Segment:
        case BodyKind::Polygon:
            return vmax();
        case BodyKind::Ray:
            if (dot(u, rays_[0]) > tol) return std::nullopt;
            return vmax();
        case BodyKind::Line:
        case BodyKind::Strip:
            if (std::fabs(dot(u, rays_[0])) > tol) return std::nullopt;
            return vmax();
        case BodyKind::Wedge:
            if (dot(u, rays_[0]) > tol || dot(u, rays_[1]) > tol) return std::nullopt;
            return vmax();
        case BodyKind::Halfplane: {
            if (std::fabs(dot(u, rays_[0])) > tol) return std::nullopt;
            Vec2 n = rot90cw(rays_[0]);
            if (dot(u, n) > tol) return dot(u, verts_[0]);
            if (sup_norm(u) <= tol) return 0.0;
            return std::nullopt;  // inward direction, unbounded
        }
        case BodyKind::Plane:
            if (sup_norm(u) <= tol) return 0.0;
            return std::nullopt;
    }
    return std::nullopt;
}

bool ConvexBody2::contains(Vec2 p, double tol) const {
    if (kind_ == BodyKind::Empty) return false;
    if (kind_ == BodyKind::Plane) return true;
    for (const Halfspace& h : halfspaces())
        if (signed_value(h, p) > tol * (1.0 + euclid_norm(h.n)) * (1.0 + sup_norm(p)))
            return false;
    return true;
}

void ConvexBody2::validate() const {
    auto fail = [](const char* m) { throw std::invalid_argument(m); };
    for (Vec2 v : verts_)
        if (!finite(v)) fail("non-finite vertex");
    for (Vec2 r : rays_)
        if (!finite(r) || !approx_eq(sup_norm(r), 1.0, 1e-9)) fail("ray not sup-norm 1");
    switch (kind_) {
        case BodyKind::Empty:
            if (!verts_.empty() || !rays_.empty()) fail("empty body carries data");
            break;
        case BodyKind::Point:
            if (verts_.size() != 1 || !rays_.empty()) fail("point shape");
            break;
        case BodyKind::Segment:
            if (verts_.size() != 2 || !rays_.empty()) fail("segment shape");
            if (approx_eq(verts_[0], verts_[1])) fail("degenerate segment");
            break;
        case BodyKind::Ray:
            if (verts_.size() != 1 || rays_.size() != 1) fail("ray shape");
            break;
        case BodyKind::Line:
            if (verts_.size() != 1 || rays_.size() != 2) fail("line shape");
            if (!approx_eq(rays_[0], -rays_[1])) fail("line rays must be opposite");
            break;
        case BodyKind::Polygon: {
            if (verts_.size() < 3 || !rays_.empty()) fail("polygon shape");
            const double cr_tol = kGeomEps * scale_of(verts_);
            for (size_t i = 0; i < verts_.size(); ++i) {
                Vec2 a = verts_[i];
                Vec2 b = verts_[(i + 1) % verts_.size()];
                Vec2 c = verts_[(i + 2) % verts_.size()];
                if (turn(a, b, c) <= cr_tol) fail("polygon not strictly convex CCW");
            }
            break;
        }
        case BodyKind::Wedge: {
            if (verts_.empty() || rays_.size() != 2) fail("wedge shape");
            // chain plus infinite edges must turn left at every vertex
            std::vector<Vec2> ext;
            ext.push_back(verts_.front() + rays_[0]);
            ext.insert(ext.end(), verts_.begin(), verts_.end());
            ext.push_back(verts_.back() + rays_[1]);
            const double cr_tol = kGeomEps * scale_of(ext);
            for (size_t i = 0; i + 2 < ext.size(); ++i)
                if (turn(ext[i], ext[i + 1], ext[i + 2]) <= cr_tol)
                    fail("wedge chain not strictly convex CCW");
            // recession cone must be line-free
            if (cross(rays_[1], rays_[0]) < -kGeomEps ||
                (std::fabs(cross(rays_[1], rays_[0])) <= kGeomEps && dot(rays_[0], rays_[1]) < 0))
                fail("wedge recession cone not pointed");
            break;
        }
        case BodyKind::Strip:
            if (verts_.size() != 2 || rays_.size() != 1) fail("strip shape");
            if (approx_eq(verts_[0], verts_[1])) fail("degenerate strip");
            break;
        case BodyKind::Halfplane:
            if (verts_.size() != 1 || rays_.size() != 1) fail("halfplane shape");
            break;
        case BodyKind::Plane:
            if (!verts_.empty() || !rays_.empty()) fail("plane shape");
            break;
    }
}

bool operator==(const ConvexBody2& a, const ConvexBody2& b) { return bodies_equal(a, b); }

bool bodies_equal(const ConvexBody2& a, const ConvexBody2& b, double tol) {
    if (a.kind() != b.kind()) return false;
    if (a.verts().size() != b.verts().size() || a.rays().size() != b.rays().size())
        return false;
    for (size_t i = 0; i < a.verts().size(); ++i)
        if (!approx_eq(a.verts()[i], b.verts()[i], tol * (1.0 + sup_norm(a.verts()[i]))))
            return false;
    for (size_t i = 0; i < a.rays().size(); ++i)
        if (!approx_eq(a.rays()[i], b.rays()[i], tol)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Recession cones

bool operator==(const RecessionCone& a, const RecessionCone& b) {
    if (a.type != b.type || a.dirs.size() != b.dirs.size()) return false;
    for (size_t i = 0; i < a.dirs.size(); ++i)
        if (!approx_eq(a.dirs[i], b.dirs[i], 1e-7)) return false;
    if (a.type == RecessionCone::Type::Halfplane && !approx_eq(a.orient, b.orient, 1e-7))
        return false;
    return true;
}

RecessionCone recession_cone(const ConvexBody2& a) {
    if (a.is_empty()) throw std::invalid_argument("recession cone of empty body");
    RecessionCone rc;
    auto sorted = [](std::vector<Vec2> d) {
        std::sort(d.begin(), d.end(),
                  [](Vec2 x, Vec2 y) { return angle_of(x) < angle_of(y); });
        return d;
    };
    switch (a.kind()) {
        case BodyKind::Point:
        case BodyKind::Segment:
        case BodyKind::Polygon:
            rc.type = RecessionCone::Type::Zero;
            break;
        case BodyKind::Ray:
            rc.type = RecessionCone::Type::Ray;
            rc.dirs = {a.rays()[0]};
            break;
        case BodyKind::Line:
        case BodyKind::Strip: {
            rc.type = RecessionCone::Type::Line;
            Vec2 d = a.kind() == BodyKind::Line ? a.rays()[0] : a.rays()[0];
            rc.dirs = sorted({canonical_dir(d), canonical_dir(-d)});
            break;
        }
        case BodyKind::Wedge: {
            Vec2 rin = a.rays()[0], rout = a.rays()[1];
            if (approx_eq(rin, rout, 1e-9)) {
                rc.type = RecessionCone::Type::Ray;
                rc.dirs = {rin};
            } else {
                rc.type = RecessionCone::Type::Pointed;
                rc.dirs = sorted({rin, rout});
            }
            break;
        }
        case BodyKind::Halfplane: {
            rc.type = RecessionCone::Type::Halfplane;
            Vec2 d = a.rays()[0];
            rc.dirs = sorted({canonical_dir(d), canonical_dir(-d)});
            Vec2 inward = -rot90cw(d);
            rc.orient = canonical_dir(inward);
            break;
        }
        case BodyKind::Plane:
            rc.type = RecessionCone::Type::Plane;
            break;
        case BodyKind::Empty:
            break;
    }
    return rc;
}

// ---------------------------------------------------------------------------
// hull + cone assembly

namespace {

// Builds conv(points) + cone(r_out .. r_in) for a pointed (line-free) cone,
// where the cone sweeps CCW from r_out to r_in. Points need not be extreme.
ConvexBody2 hull_with_rays(const std::vector<Vec2>& points, Vec2 r_in, Vec2 r_out) {
    std::vector<Vec2> hull = convex_hull(points, kGeomEps);
    if (hull.empty()) return ConvexBody2::empty();
    r_in = canonical_dir(r_in);
    r_out = canonical_dir(r_out);
    const double s = scale_of(hull);
    const double tol = kGeomEps * (1.0 + s);

    Vec2 n_in = rot90ccw(r_in);
    Vec2 n_out = rot90cw(r_out);
    auto pick = [&](Vec2 n, Vec2 ray_dir) {
        double best = -std::numeric_limits<double>::infinity();
        for (Vec2 p : hull) best = std::max(best, dot(n, p));
        size_t idx = 0;
        double best_t = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < hull.size(); ++i) {
            if (dot(n, hull[i]) < best - tol) continue;
            double t = dot(ray_dir, hull[i]);
            if (t < best_t) { best_t = t; idx = i; }
        }
        return idx;
    };
    size_t first = pick(n_in, r_in);
    size_t last = pick(n_out, r_out);

    std::vector<Vec2> chain;
    if (hull.size() <= 2) {
        chain.push_back(hull[first]);
        if (last != first) chain.push_back(hull[last]);
    } else {
        size_t i = first;
        chain.push_back(hull[i]);
        while (i != last) {
            i = (i + 1) % hull.size();
            chain.push_back(hull[i]);
        }
    }

    // prune chain points collinear with their neighbors, treating the two
    // infinite edges as extra segments
    std::vector<Vec2> ext;
    ext.push_back(chain.front() + s * r_in);
    ext.insert(ext.end(), chain.begin(), chain.end());
    ext.push_back(chain.back() + s * r_out);
    {
        std::vector<Vec2> kept;
        std::vector<Vec2> work = ext;
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 1; i + 1 < work.size(); ++i) {
                if (turn(work[i - 1], work[i], work[i + 1]) <=
                    kGeomEps * scale_of(work)) {
                    work.erase(work.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
            }
        }
        kept.assign(work.begin() + 1, work.end() - 1);
        if (kept.empty()) {
            // everything collinear with the rays; the body is the single
            // extreme vertex plus the cone
            kept.push_back(chain.front());
        }
        chain = std::move(kept);
    }

    if (chain.size() == 1 && approx_eq(r_in, r_out, 1e-12))
        return ConvexBody2::ray(chain[0], r_in);
    return ConvexBody2::wedge(std::move(chain), r_in, r_out);
}

ConvexBody2 assemble(const std::vector<Vec2>& pts, const std::optional<Arc>& cone,
                     const std::vector<Vec2>& snap_dirs) {
    if (pts.empty()) return ConvexBody2::empty();
    if (!cone) return ConvexBody2::hull_of(pts);
    Vec2 r_out = dir_of_angle(cone->start, snap_dirs);
    Vec2 r_in = dir_of_angle(cone->start + cone->len, snap_dirs);
    return hull_with_rays(pts, r_in, r_out);
}

Arc wedge_arc(const ConvexBody2& w) {
    double a_out = angle_of(w.rays()[1]);
    double a_in = angle_of(w.rays()[0]);
    double len = a_in - a_out;
    while (len < -kAngEps) len += 2.0 * M_PI;
    while (len >= 2.0 * M_PI - kAngEps) len -= 2.0 * M_PI;
    return {a_out, std::max(0.0, len)};
}

Arc halfspace_arc(Vec2 n) {
    return {angle_of(rot90ccw(n)), M_PI};
}

}  // namespace

// ---------------------------------------------------------------------------
// Clipping

ConvexBody2 clip(const ConvexBody2& a, const Halfspace& h) {
    const Vec2 n = h.n;
    if (sup_norm(n) <= 0.0) throw std::invalid_argument("halfspace needs a normal");
    const double ns = euclid_norm(n);
    auto sval = [&](Vec2 p) { return dot(n, p) - h.c; };
    auto tolp = [&](Vec2 p) { return kGeomEps * ns * (1.0 + sup_norm(p)); };

    switch (a.kind()) {
        case BodyKind::Empty:
            return a;
        case BodyKind::Plane:
            return ConvexBody2::halfplane(n, h.c);
        case BodyKind::Point:
            return sval(a.verts()[0]) <= tolp(a.verts()[0]) ? a : ConvexBody2::empty();
        case BodyKind::Segment: {
            Vec2 p = a.verts()[0], q = a.verts()[1];
            double sp = sval(p), sq = sval(q);
            bool ip = sp <= tolp(p), iq = sq <= tolp(q);
            if (ip && iq) return a;
            if (!ip && !iq) return ConvexBody2::empty();
            double t = sp / (sp - sq);
            Vec2 x = p + t * (q - p);
            return ip ? ConvexBody2::segment(p, x) : ConvexBody2::segment(x, q);
        }
        case BodyKind::Ray: {
            Vec2 p = a.verts()[0], d = a.rays()[0];
            double sp = sval(p), sd = dot(n, d);
            if (std::fabs(sd) <= kGeomEps * ns)
                return sp <= tolp(p) ? a : ConvexBody2::empty();
            double t = -sp / sd;
            if (sd > 0) {
                if (t <= -kGeomEps) return sp <= tolp(p) ? ConvexBody2::point(p)
                                                         : ConvexBody2::empty();
                if (sp > tolp(p)) return ConvexBody2::empty();
                return ConvexBody2::segment(p, p + t * d);
            }
            // sd < 0: the far part of the ray is inside
            if (t <= kGeomEps) return a;
            return ConvexBody2::ray(p + t * d, d);
        }
        case BodyKind::Line: {
            Vec2 p = a.verts()[0], d = a.rays()[0];
            double sp = sval(p), sd = dot(n, d);
            if (std::fabs(sd) <= kGeomEps * ns)
                return sp <= tolp(p) ? a : ConvexBody2::empty();
            double t = -sp / sd;
            Vec2 x = p + t * d;
            return ConvexBody2::ray(x, sd > 0 ? -d : d);
        }
        case BodyKind::Halfplane: {
            Vec2 d = a.rays()[0];
            Vec2 n0 = rot90cw(d);
            double n0l = euclid_norm(n0);
            n0 = {n0.x / n0l, n0.y / n0l};  // unit outward normal
            double c0 = dot(n0, a.verts()[0]);
            double cr = cross(n0, n);
            if (std::fabs(cr) <= kGeomEps * ns) {
                double chat = h.c / ns;
                Vec2 nhat = (1.0 / ns) * n;
                if (dot(n0, nhat) > 0) {
                    // same side: keep the tighter bound
                    return chat < c0 - kGeomEps ? ConvexBody2::halfplane(n, h.c) : a;
                }
                // opposite side: a strip, a line, or nothing
                double lo = -chat;  // n0 . x >= lo
                if (lo > c0 + kGeomEps) return ConvexBody2::empty();
                if (std::fabs(lo - c0) <= kGeomEps)
                    return ConvexBody2::line(c0 * n0, d);
                return ConvexBody2::strip(c0 * n0, lo * n0, d);
            }
            // independent boundaries: a wedge with one vertex
            double det = cr;
            Vec2 v{(c0 * n.y - h.c * n0.y) / det, (n0.x * h.c - n.x * c0) / det};
            // boundary direction of the original halfplane that stays inside h
            Vec2 u0 = dot(n, d) < 0 ? d : -d;
            // boundary direction of h that stays inside the original halfplane
            Vec2 dh = rot90ccw(n);
            Vec2 u1 = dot(n0, dh) < 0 ? dh : -dh;
            // classify: r_out has its CW normal among the outward normals
            Vec2 r_in, r_out;
            if (dot(rot90cw(u0), n0) > 0) { r_out = u0; r_in = u1; }
            else { r_out = u1; r_in = u0; }
            return ConvexBody2::wedge({v}, r_in, r_out);
        }
        case BodyKind::Strip: {
            Vec2 d = a.rays()[0];
            Vec2 p0 = a.verts()[0], p1 = a.verts()[1];
            double sd = dot(n, d);
            if (std::fabs(sd) <= kGeomEps * ns) {
                Vec2 nsv = rot90cw(d);  // unit (d is sup-norm 1 but not unit)
                double nl = euclid_norm(nsv);
                Vec2 n1{nsv.x / nl, nsv.y / nl};
                double lo = std::min(dot(n1, p0), dot(n1, p1));
                double hi = std::max(dot(n1, p0), dot(n1, p1));
                Vec2 nhat = (1.0 / ns) * n;
                double chat = h.c / ns;
                if (dot(nhat, n1) > 0) hi = std::min(hi, chat);
                else lo = std::max(lo, -chat);
                if (lo > hi + kGeomEps) return ConvexBody2::empty();
                if (std::fabs(hi - lo) <= kGeomEps) return ConvexBody2::line(lo * n1, d);
                return ConvexBody2::strip(lo * n1, hi * n1, d);
            }
            double t0 = -sval(p0) / sd;
            double t1 = -sval(p1) / sd;
            Vec2 q0 = p0 + t0 * d;
            Vec2 q1 = p1 + t1 * d;
            Vec2 dd = sd < 0 ? d : -d;
            return hull_with_rays({q0, q1}, dd, dd);
        }
        case BodyKind::Polygon: {
            std::vector<Vec2> cand;
            const auto& v = a.verts();
            for (size_t i = 0; i < v.size(); ++i) {
                Vec2 p = v[i], q = v[(i + 1) % v.size()];
                double sp = sval(p), sq = sval(q);
                if (sp <= tolp(p)) cand.push_back(p);
                bool ip = sp > tolp(p), iq = sq > tolp(q);
                if (ip != iq && std::fabs(sp - sq) > 0) {
                    double t = sp / (sp - sq);
                    if (t > 0 && t < 1) cand.push_back(p + t * (q - p));
                }
            }
            return ConvexBody2::hull_of(cand);
        }
        case BodyKind::Wedge: {
            const auto& v = a.verts();
            Vec2 r_in = a.rays()[0], r_out = a.rays()[1];
            double din = dot(n, r_in), dout = dot(n, r_out);
            bool all_in = din <= kGeomEps * ns && dout <= kGeomEps * ns;
            if (all_in) {
                bool verts_in = true;
                for (Vec2 p : v)
                    if (sval(p) > tolp(p)) { verts_in = false; break; }
                if (verts_in) return a;
            }
            std::vector<Vec2> cand;
            for (Vec2 p : v)
                if (sval(p) <= tolp(p)) cand.push_back(p);
            for (size_t i = 0; i + 1 < v.size(); ++i) {
                double sp = sval(v[i]), sq = sval(v[i + 1]);
                bool ip = sp > tolp(v[i]), iq = sq > tolp(v[i + 1]);
                if (ip != iq && std::fabs(sp - sq) > 0) {
                    double t = sp / (sp - sq);
                    if (t > 0 && t < 1) cand.push_back(v[i] + t * (v[i + 1] - v[i]));
                }
            }
            auto ray_cross = [&](Vec2 base, Vec2 dir, double sd) {
                double sb = sval(base);
                if (sd > kGeomEps * ns && sb < -tolp(base))
                    cand.push_back(base + (-sb / sd) * dir);
                else if (sd < -kGeomEps * ns && sb > tolp(base))
                    cand.push_back(base + (-sb / sd) * dir);
            };
            ray_cross(v.front(), r_in, din);
            ray_cross(v.back(), r_out, dout);
            if (cand.empty()) return ConvexBody2::empty();
            std::optional<Arc> cone = arc_intersect(wedge_arc(a), halfspace_arc(n));
            std::vector<Vec2> snap{r_in, r_out, rot90ccw(n), rot90cw(n)};
            return assemble(cand, cone, snap);
        }
    }
    return ConvexBody2::empty();
}

ConvexBody2 intersect(const ConvexBody2& a, const ConvexBody2& b) {
    if (a.is_empty() || b.is_empty()) return ConvexBody2::empty();
    if (b.kind() == BodyKind::Plane) return a;
    ConvexBody2 out = a;
    for (const Halfspace& h : b.halfspaces()) {
        out = clip(out, h);
        if (out.is_empty()) break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Minkowski neighborhoods

ConvexBody2 minkowski_neighborhood(const ConvexBody2& a, const PolygonalNorm& nn,
                                   double r) {
    if (a.is_empty()) throw std::invalid_argument("neighborhood of empty body");
    if (!(r >= 0.0)) throw std::invalid_argument("radius must be nonnegative");
    if (r == 0.0) return a;
    const auto& ball = nn.unit_ball_vertices();
    auto shifted = [&](const std::vector<Vec2>& vs) {
        std::vector<Vec2> pts;
        pts.reserve(vs.size() * ball.size());
        for (Vec2 v : vs)
            for (Vec2 k : ball) pts.push_back(v + r * k);
        return pts;
    };
    auto extreme_ball = [&](Vec2 n) {
        Vec2 best = ball[0];
        for (Vec2 k : ball)
            if (dot(n, k) > dot(n, best)) best = k;
        return best;
    };
    switch (a.kind()) {
        case BodyKind::Point:
        case BodyKind::Segment:
        case BodyKind::Polygon:
            return ConvexBody2::hull_of(shifted(a.verts()));
        case BodyKind::Ray:
            return hull_with_rays(shifted(a.verts()), a.rays()[0], a.rays()[0]);
        case BodyKind::Wedge:
            return hull_with_rays(shifted(a.verts()), a.rays()[0], a.rays()[1]);
        case BodyKind::Line: {
            Vec2 d = a.rays()[0];
            Vec2 n = rot90cw(d);
            Vec2 p = a.verts()[0];
            return ConvexBody2::strip(p + r * extreme_ball(n), p + r * extreme_ball(-n), d);
        }
        case BodyKind::Strip: {
            Vec2 d = a.rays()[0];
            Vec2 n = rot90cw(d);
            Vec2 p0 = a.verts()[0], p1 = a.verts()[1];
            Vec2 hi = dot(n, p0) >= dot(n, p1) ? p0 : p1;
            Vec2 lo = dot(n, p0) >= dot(n, p1) ? p1 : p0;
            return ConvexBody2::strip(hi + r * extreme_ball(n), lo + r * extreme_ball(-n), d);
        }
        case BodyKind::Halfplane: {
            Vec2 d = a.rays()[0];
            Vec2 n = rot90cw(d);
            Vec2 p = a.verts()[0] + r * extreme_ball(n);
            return ConvexBody2::halfplane(n, dot(n, p));
        }
        case BodyKind::Plane:
            return a;
        case BodyKind::Empty:
            break;
    }
    return ConvexBody2::empty();
}

// ---------------------------------------------------------------------------
// Distances

namespace {

// Candidate directions where support-function ratios can attain extrema.
std::vector<Vec2> candidate_dirs(const ConvexBody2& a, const ConvexBody2* b,
                                 const PolygonalNorm& n) {
    std::vector<Vec2> dirs = a.face_normals();
    if (b) {
        auto fb = b->face_normals();
        dirs.insert(dirs.end(), fb.begin(), fb.end());
    }
    for (Vec2 f : n.edge_functionals()) {
        double l = euclid_norm(f);
        dirs.push_back({f.x / l, f.y / l});
    }
    return dirs;
}

}  // namespace

HausdorffValue dist_point_body(Vec2 p, const ConvexBody2& a, const PolygonalNorm& n) {
    if (a.is_empty()) return HausdorffValue::infinite();
    if (a.kind() == BodyKind::Plane) return HausdorffValue::finite(0.0);
    double best = 0.0;
    for (Vec2 u : candidate_dirs(a, nullptr, n)) {
        auto s = a.support(u);
        if (!s) continue;
        best = std::max(best, (dot(u, p) - *s) / n.support(u));
    }
    return HausdorffValue::finite(std::max(0.0, best));
}

HausdorffValue hausdorff_bodies(const ConvexBody2& a, const ConvexBody2& b,
                                const PolygonalNorm& n) {
    if (a.is_empty() || b.is_empty())
        throw std::invalid_argument("hausdorff_bodies requires nonempty bodies");
    if (!(recession_cone(a) == recession_cone(b))) return HausdorffValue::infinite();
    double best = 0.0;
    for (Vec2 u : candidate_dirs(a, &b, n)) {
        auto sa = a.support(u);
        auto sb = b.support(u);
        if (!sa || !sb) continue;
        best = std::max(best, std::fabs(*sa - *sb) / n.support(u));
    }
    return HausdorffValue::finite(best);
}

double body_separation(const ConvexBody2& a, const ConvexBody2& b,
                       const PolygonalNorm& n) {
    if (a.is_empty() || b.is_empty())
        throw std::invalid_argument("separation requires nonempty bodies");
    if (!intersect(a, b).is_empty()) return 0.0;
    double hi = 1.0;
    for (int i = 0; i < 60 && intersect(minkowski_neighborhood(a, n, hi), b).is_empty();
         ++i)
        hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        if (intersect(minkowski_neighborhood(a, n, mid), b).is_empty()) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Sampling helpers

std::vector<Vec2> boundary_samples(const ConvexBody2& a, int count) {
    if (count <= 0) throw std::invalid_argument("need a positive sample count");
    switch (a.kind()) {
        case BodyKind::Point:
            return std::vector<Vec2>(1, a.verts()[0]);
        case BodyKind::Segment: {
            std::vector<Vec2> out;
            for (int i = 0; i < count; ++i) {
                double t = count == 1 ? 0.0 : double(i) / (count - 1);
                out.push_back(a.verts()[0] + t * (a.verts()[1] - a.verts()[0]));
            }
            return out;
        }
        case BodyKind::Polygon: {
            const auto& v = a.verts();
            std::vector<double> acc{0.0};
            for (size_t i = 0; i < v.size(); ++i)
                acc.push_back(acc.back() + euclid_norm(v[(i + 1) % v.size()] - v[i]));
            double total = acc.back();
            std::vector<Vec2> out;
            out.reserve(static_cast<size_t>(count));
            for (int k = 0; k < count; ++k) {
                double s = total * k / count;
                size_t i = 0;
                while (i + 1 < acc.size() && acc[i + 1] < s) ++i;
                double seg = acc[i + 1] - acc[i];
                double t = seg > 0 ? (s - acc[i]) / seg : 0.0;
                out.push_back(v[i] + t * (v[(i + 1) % v.size()] - v[i]));
            }
            return out;
        }
        default:
            throw std::invalid_argument("boundary_samples needs a bounded body");
    }
}

Vec2 interior_point(const ConvexBody2& a) {
    if (a.verts().empty()) throw std::invalid_argument("no interior point available");
    Vec2 c{0, 0};
    for (Vec2 v : a.verts()) c = c + v;
    return (1.0 / static_cast<double>(a.verts().size())) * c;
}

InteriorNeighborhoodReport is_interior_equal_open_nbhd(const ConvexBody2& a,
                                                       const PolygonalNorm& n, double r,
                                                       int boundary_sample_count,
                                                       double tol) {
    if (a.is_empty()) throw std::invalid_argument("empty body");
    if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
    ConvexBody2 nb = minkowski_neighborhood(a, n, r);
    InteriorNeighborhoodReport rep;
    Vec2 c = interior_point(nb);
    for (Vec2 s : boundary_samples(nb, boundary_sample_count)) {
        double d = dist_point_body(s, a, n).value();
        rep.max_boundary_error = std::max(rep.max_boundary_error, std::fabs(d - r));
        Vec2 q = c + 0.5 * (s - c);
        rep.max_interior_dist =
            std::max(rep.max_interior_dist, dist_point_body(q, a, n).value());
    }
    rep.pass = rep.max_boundary_error <= tol && rep.max_interior_dist < r;
    return rep;
}

}  // namespace fr
