#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fr/norm.hpp"
#include "fr/vec2.hpp"

namespace fr::oracle {

// Membership predicate for a closed convex set given in closed form.
using SetPredicate = std::function<bool(Vec2)>;

// Square sampling window: center plus half-width, step h.
struct GridSpec {
    Vec2 center{0, 0};
    double half_width = 10.0;
    double step = 0.01;

    GridSpec() = default;
    GridSpec(Vec2 c, double r, double h);
};

struct GridValue {
    double value = 0.0;
    double error_bound = 0.0;
};

// Equivalence constant between the gauge of N and the grid's sup-norm:
// gauge(v) <= c * sup_norm(v).
double gauge_vs_grid_constant(const PolygonalNorm& n);

// min over in-set grid points of gauge(p - g). Error bound h * c.
// Throws if the set misses the window entirely.
GridValue grid_dist_point_set(Vec2 p, const SetPredicate& set, const GridSpec& grid,
                              const PolygonalNorm& n);

// Symmetric max of directed grid distances between two convex sets.
// Error bound 2 h c. Predicates must describe convex sets (the directed
// maximum is only scanned over boundary and window-frame cells, which is
// exhaustive for convex sets).
GridValue grid_hausdorff(const SetPredicate& set_a, const SetPredicate& set_b,
                         const GridSpec& grid, const PolygonalNorm& n);

struct WindowedGrowthSeries {
    std::vector<double> windows;  // increasing half-widths R
    std::vector<double> values;   // windowed Hausdorff distance per R
    std::vector<double> steps;    // grid step used per R

    // "unbounded" | "plateau" | "undetermined"
    std::string verdict() const;
    bool strictly_increasing() const;
};

// Windowed Hausdorff distances across growing windows, h = R / 1000 by
// default. Unbounded growth across windows certifies infinite distance.
WindowedGrowthSeries windowed_growth(const SetPredicate& set_a, const SetPredicate& set_b,
                                     const std::vector<double>& windows,
                                     const PolygonalNorm& n,
                                     double steps_per_window = 1000.0);

}  // namespace fr::oracle
