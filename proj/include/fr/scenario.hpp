#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fr/body.hpp"
#include "fr/metric.hpp"
#include "fr/norm.hpp"
#include "fr/oracle.hpp"

namespace fr {

enum class ScenarioKind { Metric, Convex2d, PointCloud, Predicate };
enum class ExpectedTag { RightJump, LeftJump, LipschitzPass, InfiniteDistance, FiniteDistance };

std::string kind_name(ScenarioKind k);
std::string tag_name(ExpectedTag t);

// A named, immutable experiment: the pair (A, B), the norm, and the
// qualitative outcome the analyzers are expected to reproduce.
struct Scenario {
    std::string name;
    ScenarioKind kind = ScenarioKind::Convex2d;
    ExpectedTag expected = ExpectedTag::LipschitzPass;
    std::map<std::string, double> params;

    // convex2d / pointcloud payloads
    ConvexBody2 body_a;
    ConvexBody2 body_b;              // convex2d only
    std::vector<Vec2> cloud_b;       // pointcloud only
    PolygonalNorm norm = PolygonalNorm::sup();

    // metric payload
    std::shared_ptr<const FiniteMetricSpace> space;
    SubsetMask mask_a, mask_b;

    // predicate payload: the two planar parabola sections y >= x^2 / r
    double parabola_r1 = 0.0, parabola_r2 = 0.0;

    double param(const std::string& key) const;
    double param_or(const std::string& key, double fallback) const;
};

// Parse the scenario text format:
//   [space]    kind = metric | convex2d | pointcloud | predicate
//   [A], [B]   vertices = / rays = / halfplane = / points = / generator = / r =
//   [norm]     ball = sup | l1 | euclid:<2m> | polygon:<x,y;x,y;...>
//   [expected] tag = ... plus numeric parameters
// Unknown sections or keys are rejected; errors carry the line number.
Scenario parse_scenario_text(const std::string& text, const std::string& origin = "<string>");

std::vector<std::string> scenario_names();
Scenario load_scenario(const std::string& name);  // throws on unknown name
// The embedded source text a registry entry was parsed from.
std::string scenario_source(const std::string& name);

struct ScenarioOutcome {
    bool matched = false;
    ExpectedTag expected;
    std::vector<std::string> measured;  // human-readable measurement lines
};

// Dispatch to the matching analyzer and compare against the expected tag.
// Analyzer precondition failures fold into the report instead of throwing.
ScenarioOutcome run_scenario(const Scenario& s);

// Gauge distance from the point (x, x^2 / r_from) to the parabola epigraph
// y >= x^2 / r_to, by 1D minimization along the target boundary.
double parabola_boundary_distance(double x, double r_from, double r_to,
                                  const PolygonalNorm& n);

// sup over the boundary of the r_from-epigraph restricted to |x| <= window
// of the distance to the r_to-epigraph. Grows on the order of window/4 for
// r_from = 2, r_to = 1, which certifies an infinite Hausdorff distance.
double parabola_window_sup(double r_from, double r_to, double window,
                           const PolygonalNorm& n);

oracle::WindowedGrowthSeries parabola_growth(double r1, double r2,
                                             const std::vector<double>& windows,
                                             const PolygonalNorm& n);

}  // namespace fr
