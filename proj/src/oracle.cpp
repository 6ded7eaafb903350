#include "fr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace fr::oracle {

GridSpec::GridSpec(Vec2 c, double r, double h) : center(c), half_width(r), step(h) {
    if (!(h > 0.0)) throw std::invalid_argument("grid step must be positive");
    if (h > r) throw std::invalid_argument("grid step must not exceed the half-width");
}

double gauge_vs_grid_constant(const PolygonalNorm& n) {
    // The gauge is convex, so its max over the sup-norm unit square is
    // attained at a corner.
    double c = 0.0;
    c = std::max(c, n.eval({1, 1}));
    c = std::max(c, n.eval({1, -1}));
    c = std::max(c, n.eval({-1, 1}));
    c = std::max(c, n.eval({-1, -1}));
    return c;
}

namespace {

struct Lattice {
    Vec2 origin;   // grid point (0, 0)
    double step;   // effective step (h snapped so the window is covered)
    int count;     // points per axis

    Lattice(const GridSpec& g) {
        int cells = std::max(1, (int)std::llround(2.0 * g.half_width / g.step));
        count = cells + 1;
        step = 2.0 * g.half_width / cells;
        origin = g.center - Vec2{g.half_width, g.half_width};
    }

    Vec2 at(int i, int j) const { return origin + Vec2{i * step, j * step}; }
};

std::vector<uint8_t> rasterize(const SetPredicate& set, const Lattice& lat) {
    std::vector<uint8_t> in((size_t)lat.count * lat.count, 0);
    for (int j = 0; j < lat.count; ++j)
        for (int i = 0; i < lat.count; ++i)
            if (set(lat.at(i, j))) in[(size_t)j * lat.count + i] = 1;
    return in;
}

// In-set cells adjacent to the complement or to the window frame. For a
// convex set these carry both the extreme points of the in-window hull and
// near-boundary cells, which is all the Hausdorff scan needs.
std::vector<Vec2> boundary_candidates(const std::vector<uint8_t>& in, const Lattice& lat) {
    std::vector<Vec2> out;
    const int n = lat.count;
    auto at = [&](int i, int j) { return in[(size_t)j * n + i]; };
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (!at(i, j)) continue;
            bool edge = i == 0 || j == 0 || i == n - 1 || j == n - 1;
            if (!edge) {
                for (int dj = -1; dj <= 1 && !edge; ++dj)
                    for (int di = -1; di <= 1 && !edge; ++di)
                        if (!at(i + di, j + dj)) edge = true;
            }
            if (edge) out.push_back(lat.at(i, j));
        }
    return out;
}

// max over `from` of the gauge distance to the nearest point of `to`,
// with `to` sorted by x so the scan can stop once |dx| alone exceeds the
// best distance found so far.
double directed_max(const std::vector<Vec2>& from, const std::vector<Vec2>& to_sorted,
                    const SetPredicate& to_set, const PolygonalNorm& n) {
    const double msup = n.sup_norm_radius();  // gauge(v) >= sup_norm(v) / msup
    double worst = 0.0;
    for (Vec2 a : from) {
        if (to_set(a)) continue;
        double best = std::numeric_limits<double>::infinity();
        auto it = std::lower_bound(to_sorted.begin(), to_sorted.end(), a.x,
                                   [](Vec2 v, double x) { return v.x < x; });
        auto lo = it, hi = it;
        while (true) {
            bool more = false;
            if (hi != to_sorted.end() && (hi->x - a.x) <= best * msup) {
                best = std::min(best, n.eval(*hi - a));
                ++hi;
                more = true;
            }
            if (lo != to_sorted.begin() && (a.x - std::prev(lo)->x) <= best * msup) {
                --lo;
                best = std::min(best, n.eval(*lo - a));
                more = true;
            }
            if (!more) break;
        }
        if (!std::isfinite(best)) throw std::runtime_error("window too small: set misses the grid window");
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

GridValue grid_dist_point_set(Vec2 p, const SetPredicate& set, const GridSpec& grid,
                              const PolygonalNorm& n) {
    Lattice lat(grid);
    const double msup = n.sup_norm_radius();
    auto clampi = [&](int v) { return std::clamp(v, 0, lat.count - 1); };
    int i0 = clampi((int)std::llround((p.x - lat.origin.x) / lat.step));
    int j0 = clampi((int)std::llround((p.y - lat.origin.y) / lat.step));
    double off = sup_norm(p - lat.at(i0, j0));

    double best = std::numeric_limits<double>::infinity();
    int max_ring = lat.count;  // rings beyond this leave the grid entirely
    for (int k = 0; k <= max_ring; ++k) {
        if (std::isfinite(best) && (k * lat.step - off) / msup > best) break;
        auto visit = [&](int i, int j) {
            if (i < 0 || j < 0 || i >= lat.count || j >= lat.count) return;
            Vec2 g = lat.at(i, j);
            if (set(g)) best = std::min(best, n.eval(p - g));
        };
        if (k == 0) {
            visit(i0, j0);
            continue;
        }
        for (int t = -k; t <= k; ++t) {
            visit(i0 + t, j0 - k);
            visit(i0 + t, j0 + k);
            if (t > -k && t < k) {
                visit(i0 - k, j0 + t);
                visit(i0 + k, j0 + t);
            }
        }
    }
    if (!std::isfinite(best))
        throw std::runtime_error("window too small: set misses the grid window");
    return {best, lat.step * gauge_vs_grid_constant(n)};
}

GridValue grid_hausdorff(const SetPredicate& set_a, const SetPredicate& set_b,
                         const GridSpec& grid, const PolygonalNorm& n) {
    Lattice lat(grid);
    auto in_a = rasterize(set_a, lat);
    auto in_b = rasterize(set_b, lat);
    auto cand_a = boundary_candidates(in_a, lat);
    auto cand_b = boundary_candidates(in_b, lat);
    if (cand_a.empty() || cand_b.empty())
        throw std::runtime_error("window too small: set misses the grid window");
    auto by_x = [](Vec2 u, Vec2 v) { return u.x < v.x || (u.x == v.x && u.y < v.y); };
    std::sort(cand_a.begin(), cand_a.end(), by_x);
    std::sort(cand_b.begin(), cand_b.end(), by_x);
    double d = std::max(directed_max(cand_a, cand_b, set_b, n),
                        directed_max(cand_b, cand_a, set_a, n));
    return {d, 2.0 * lat.step * gauge_vs_grid_constant(n)};
}

bool WindowedGrowthSeries::strictly_increasing() const {
    for (size_t i = 1; i < values.size(); ++i)
        if (!(values[i] > values[i - 1])) return false;
    return true;
}

std::string WindowedGrowthSeries::verdict() const {
    if (values.size() < 3) return "undetermined";
    double h = steps.back();
    if (values.back() > 2.0 * values.front() + 10.0 * h) return "unbounded";
    double lo = values[values.size() - 3], hi = lo;
    for (size_t i = values.size() - 3; i < values.size(); ++i) {
        lo = std::min(lo, values[i]);
        hi = std::max(hi, values[i]);
    }
    if (hi - lo <= 4.0 * h) return "plateau";
    return "undetermined";
}

WindowedGrowthSeries windowed_growth(const SetPredicate& set_a, const SetPredicate& set_b,
                                     const std::vector<double>& windows,
                                     const PolygonalNorm& n, double steps_per_window) {
    WindowedGrowthSeries out;
    for (double r : windows) {
        double h = r / steps_per_window;
        GridSpec g({0, 0}, r, h);
        out.windows.push_back(r);
        out.steps.push_back(h);
        out.values.push_back(grid_hausdorff(set_a, set_b, g, n).value);
    }
    return out;
}

}  // namespace fr::oracle
