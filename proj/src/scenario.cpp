#include "fr/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "fr/curve.hpp"

namespace fr {

std::string kind_name(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::Metric: return "metric";
        case ScenarioKind::Convex2d: return "convex2d";
        case ScenarioKind::PointCloud: return "pointcloud";
        case ScenarioKind::Predicate: return "predicate";
    }
    return "?";
}

std::string tag_name(ExpectedTag t) {
    switch (t) {
        case ExpectedTag::RightJump: return "right-jump";
        case ExpectedTag::LeftJump: return "left-jump";
        case ExpectedTag::LipschitzPass: return "lipschitz-pass";
        case ExpectedTag::InfiniteDistance: return "infinite-distance";
        case ExpectedTag::FiniteDistance: return "finite-distance";
    }
    return "?";
}

double Scenario::param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("scenario " + name + " is missing parameter " + key);
    return it->second;
}

double Scenario::param_or(const std::string& key, double fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

namespace {

struct ParseCtx {
    std::string origin;
    int line = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error(origin + ":" + std::to_string(line) + ": " + msg);
    }
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_num(const std::string& s, const ParseCtx& ctx) {
    size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        ctx.fail("expected a number, got '" + s + "'");
    }
    if (trim(s.substr(used)) != "") ctx.fail("trailing characters after number in '" + s + "'");
    return v;
}

std::vector<double> split_nums(const std::string& s, char sep, const ParseCtx& ctx) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) out.push_back(parse_num(trim(part), ctx));
    return out;
}

std::vector<Vec2> parse_points(const std::string& s, const ParseCtx& ctx) {
    std::vector<Vec2> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto xy = split_nums(trim(part), ',', ctx);
        if (xy.size() != 2) ctx.fail("expected 'x,y' pairs separated by ';'");
        out.push_back({xy[0], xy[1]});
    }
    return out;
}

struct SetSpec {
    std::vector<Vec2> vertices;
    std::vector<Halfspace> halfplanes;
    std::vector<Vec2> points;
    std::vector<size_t> indices;
    bool all_indices = false;
    double r = 0.0;
    bool has_r = false;
};

ConvexBody2 build_body(const SetSpec& spec, const std::string& which) {
    if (!spec.halfplanes.empty()) {
        if (!spec.vertices.empty())
            throw std::runtime_error(which + ": give either vertices or halfplanes, not both");
        ConvexBody2 b = ConvexBody2::plane();
        for (const Halfspace& h : spec.halfplanes) b = clip(b, h);
        if (b.is_empty()) throw std::runtime_error(which + ": halfplanes have empty intersection");
        return b;
    }
    if (spec.vertices.empty()) throw std::runtime_error(which + ": no vertices or halfplanes given");
    return ConvexBody2::hull_of(spec.vertices);
}

PolygonalNorm parse_norm(const std::string& value, const ParseCtx& ctx) {
    if (value == "sup") return PolygonalNorm::sup();
    if (value == "l1") return PolygonalNorm::l1();
    if (value.rfind("euclid:", 0) == 0) {
        double m = parse_num(value.substr(7), ctx);
        if (m != std::floor(m) || m < 4) ctx.fail("euclid:<2m> needs an integer count >= 4");
        return PolygonalNorm::euclid((int)m);
    }
    if (value.rfind("polygon:", 0) == 0)
        return PolygonalNorm(parse_points(value.substr(8), ctx));
    ctx.fail("unknown norm '" + value + "' (expected sup | l1 | euclid:<2m> | polygon:<pts>)");
}

std::vector<double> punctured_line_points(int n) {
    std::vector<double> pts{0.0};
    for (int k = 1; k <= n; ++k) pts.push_back(1.0 + 1.0 / k);
    return pts;
}

}  // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& origin) {
    ParseCtx ctx{origin, 0};
    Scenario sc;
    sc.name = origin;

    std::string section;
    std::string kind_str, generator;
    SetSpec spec_a, spec_b;
    bool have_norm = false, have_tag = false;

    std::stringstream ss(text);
    std::string raw;
    while (std::getline(ss, raw)) {
        ++ctx.line;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']') ctx.fail("unterminated section header");
            section = line.substr(1, line.size() - 2);
            if (section != "space" && section != "A" && section != "B" &&
                section != "norm" && section != "expected")
                ctx.fail("unknown section [" + section + "]");
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) ctx.fail("expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (section.empty()) ctx.fail("key before any section");

        if (section == "space") {
            if (key == "kind") kind_str = value;
            else if (key == "name") sc.name = value;
            else if (key == "generator") generator = value;
            else ctx.fail("unknown key '" + key + "' in [space]");
        } else if (section == "A" || section == "B") {
            SetSpec& spec = section == "A" ? spec_a : spec_b;
            if (key == "vertices") spec.vertices = parse_points(value, ctx);
            else if (key == "halfplane") {
                auto v = split_nums(value, ',', ctx);
                if (v.size() != 3) ctx.fail("halfplane needs 'nx,ny,c'");
                spec.halfplanes.push_back({{v[0], v[1]}, v[2]});
            } else if (key == "points") spec.points = parse_points(value, ctx);
            else if (key == "indices") {
                if (value == "all") spec.all_indices = true;
                else for (double d : split_nums(value, ',', ctx)) {
                    if (d != std::floor(d) || d < 0) ctx.fail("indices must be nonnegative integers");
                    spec.indices.push_back((size_t)d);
                }
            } else if (key == "r") {
                spec.r = parse_num(value, ctx);
                spec.has_r = true;
            } else ctx.fail("unknown key '" + key + "' in [" + section + "]");
        } else if (section == "norm") {
            if (key != "ball") ctx.fail("unknown key '" + key + "' in [norm]");
            sc.norm = parse_norm(value, ctx);
            have_norm = true;
        } else {  // expected
            if (key == "tag") {
                have_tag = true;
                if (value == "right-jump") sc.expected = ExpectedTag::RightJump;
                else if (value == "left-jump") sc.expected = ExpectedTag::LeftJump;
                else if (value == "lipschitz-pass") sc.expected = ExpectedTag::LipschitzPass;
                else if (value == "infinite-distance") sc.expected = ExpectedTag::InfiniteDistance;
                else if (value == "finite-distance") sc.expected = ExpectedTag::FiniteDistance;
                else ctx.fail("unknown expected tag '" + value + "'");
            } else {
                sc.params[key] = parse_num(value, ctx);
            }
        }
    }

    ctx.line = 0;
    if (kind_str == "metric") sc.kind = ScenarioKind::Metric;
    else if (kind_str == "convex2d") sc.kind = ScenarioKind::Convex2d;
    else if (kind_str == "pointcloud") sc.kind = ScenarioKind::PointCloud;
    else if (kind_str == "predicate") sc.kind = ScenarioKind::Predicate;
    else ctx.fail("missing or unknown [space] kind");
    if (!have_tag) ctx.fail("missing [expected] tag");

    switch (sc.kind) {
        case ScenarioKind::Metric: {
            if (generator.rfind("punctured_line:", 0) != 0)
                ctx.fail("metric scenarios need generator = punctured_line:<n>");
            int n = (int)parse_num(generator.substr(15), ctx);
            sc.space = FiniteMetricSpace::line(punctured_line_points(n));
            auto build_mask = [&](const SetSpec& spec) {
                if (spec.all_indices) return SubsetMask::full(sc.space);
                std::vector<char> m(sc.space->size(), 0);
                for (size_t i : spec.indices) {
                    if (i >= m.size()) ctx.fail("mask index out of range");
                    m[i] = 1;
                }
                return SubsetMask(sc.space, std::move(m));
            };
            sc.mask_a = build_mask(spec_a);
            sc.mask_b = build_mask(spec_b);
            if (sc.mask_a.is_empty() || sc.mask_b.is_empty()) ctx.fail("empty mask");
            break;
        }
        case ScenarioKind::Convex2d:
            sc.body_a = build_body(spec_a, "[A]");
            sc.body_b = build_body(spec_b, "[B]");
            if (!have_norm) ctx.fail("convex2d scenarios need a [norm] section");
            break;
        case ScenarioKind::PointCloud:
            sc.body_a = build_body(spec_a, "[A]");
            if (spec_b.points.empty()) ctx.fail("pointcloud scenarios need [B] points");
            sc.cloud_b = spec_b.points;
            if (!have_norm) ctx.fail("pointcloud scenarios need a [norm] section");
            break;
        case ScenarioKind::Predicate:
            if (!spec_a.has_r || !spec_b.has_r)
                ctx.fail("predicate scenarios need r = <value> in [A] and [B]");
            if (!(spec_a.r > 0.0) || !(spec_b.r > 0.0)) ctx.fail("parabola r must be positive");
            sc.parabola_r1 = spec_a.r;
            sc.parabola_r2 = spec_b.r;
            if (!have_norm) ctx.fail("predicate scenarios need a [norm] section");
            break;
    }
    return sc;
}

namespace {

struct RegistryEntry {
    const char* name;
    const char* text;
};

const RegistryEntry kRegistry[] = {
    {"fig1_rect_triangle", R"(# A low rectangle next to a triangle whose near vertex sits just above it
# and whose far sides are very shallow. Once the growing neighborhood of A
# touches a shallow side, the contact point races along it: consecutive
# radii produce sets further apart than the radius step.
[space]
kind = convex2d
name = fig1_rect_triangle
[A]
vertices = 0,0; 4,0; 4,1; 0,1
[B]
vertices = 2,1.2; 12,1.6; -8,1.6
[norm]
ball = euclid:64
[expected]
tag = left-jump
r_min = 0.25
r_max = 3.0
samples = 512
min_ratio = 2
)"},
    {"ex_first_punctured_line", R"(# Finite truncation of the line space {0} with the points 1 + 1/n attached.
# F_r(A, B) for A = {0} stays {0} until r reaches the nearest attached
# point at 1.01, where the curve jumps.
[space]
kind = metric
name = ex_first_punctured_line
generator = punctured_line:100
[A]
indices = 0
[B]
indices = all
[expected]
tag = right-jump
critical_r = 1.01
jump = 1.01
probe_below = 1.005
)"},
    {"ex_second_nonconvex", R"(# Non-convex B: two isolated points above the unit square. The far point
# enters F_r exactly at r = 5, adding a new component 4 away from the near
# one: a left jump of size 4, while the curve stays right continuous.
[space]
kind = pointcloud
name = ex_second_nonconvex
[A]
vertices = 0,0; 1,0; 1,1; 0,1
[B]
points = 0.5,2; 0.5,6
[norm]
ball = euclid:64
[expected]
tag = left-jump
critical_r = 5
jump = 4
tol = 1e-6
)"},
    {"ex_parabola_3d", R"(# Planar sections of the two paraboloid epigraphs y >= x^2 / r. Any two
# distinct parameters give an infinite Hausdorff distance: the windowed
# sup of boundary distances grows without bound (order window / 4).
[space]
kind = predicate
name = ex_parabola_3d
[A]
r = 1
[B]
r = 2
[norm]
ball = euclid:64
[expected]
tag = infinite-distance
window_min = 10
window_max = 100
window_count = 10
threshold = 20
)"},
    {"dim2_unbounded_finite", R"(# Two parallel halfplanes in the plane. Every F_r is a strip with the same
# recession cone, so all pairwise distances are finite and the windowed
# measurements plateau.
[space]
kind = convex2d
name = dim2_unbounded_finite
[A]
halfplane = 0,1,0
[B]
halfplane = 0,-1,1
[norm]
ball = euclid:64
[expected]
tag = finite-distance
Q = 0.1
T = 8
r1 = 1
r2 = 2
r3 = 4
)"},
    {"strip_rect", R"(# Closed-form staircase: F_r = [0, min(1+r, 10)] x [0,1] under the sup
# norm, so distances between samples equal the radius steps exactly.
[space]
kind = convex2d
name = strip_rect
[A]
vertices = 0,0; 1,0; 1,1; 0,1
[B]
vertices = 0,0; 10,0; 10,1; 0,1
[norm]
ball = sup
[expected]
tag = lipschitz-pass
Q = 0.5
T = 6
q_prime = 1
q = 2
t = 5
M = 4
ratio = 1
)"},
    {"saturated", R"(# B already lies inside A, so F_r = B for every radius: a constant curve.
[space]
kind = convex2d
name = saturated
[A]
vertices = 0,0; 1,0; 1,1; 0,1
[B]
vertices = 0.25,0.25; 0.75,0.25; 0.75,0.75; 0.25,0.75
[norm]
ball = sup
[expected]
tag = lipschitz-pass
Q = 0.1
T = 4
q_prime = 0.5
q = 1
t = 3
M = 0
ratio = 0
)"},
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

// ---- analyzers ------------------------------------------------------------

ScenarioOutcome run_left_jump_cloud(const Scenario& s) {
    ScenarioOutcome out{false, s.expected, {}};
    PointCloudCurve fam(s.body_a, s.cloud_b, s.norm);
    double rc = s.param("critical_r");
    double expect_jump = s.param("jump");
    double tol = s.param_or("tol", 1e-6);

    double left_gap = fam.distance(fam.at(rc - 1e-7), fam.at(rc)).value();
    auto probe = right_semicontinuity_probe(fam, rc, 20);
    double right_gap = probe.gaps.back().is_finite() ? probe.gaps.back().value() : -1.0;
    out.measured.push_back("left gap at r=" + fmt(rc) + ": " + fmt(left_gap));
    out.measured.push_back("right gap at r=" + fmt(rc) + ": " + fmt(right_gap));
    out.matched = std::fabs(left_gap - expect_jump) <= tol && probe.right_ok;
    return out;
}

ScenarioOutcome run_left_jump_bodies(const Scenario& s) {
    ScenarioOutcome out{false, s.expected, {}};
    BodyCurve fam(s.body_a, s.body_b, s.norm);
    double r_min = s.param("r_min"), r_max = s.param("r_max");
    int samples = (int)s.param("samples");
    double min_ratio = s.param("min_ratio");
    std::vector<double> grid;
    for (int i = 0; i < samples; ++i)
        grid.push_back(r_min + (r_max - r_min) * i / (samples - 1));
    auto curve = sample_curve(fam, grid);
    double best_ratio = 0.0, best_r = 0.0;
    for (size_t i = 1; i < curve.size(); ++i) {
        double step = curve[i].r - curve[i - 1].r;
        double ratio = curve[i].dh_to_prev->value() / step;
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best_r = curve[i].r;
        }
    }
    out.measured.push_back("max gap/step ratio: " + fmt(best_ratio) + " at r=" + fmt(best_r));
    out.matched = best_ratio >= min_ratio;
    return out;
}

ScenarioOutcome run_right_jump_metric(const Scenario& s) {
    ScenarioOutcome out{false, s.expected, {}};
    MaskCurve fam(s.mask_a, s.mask_b);
    double rc = s.param("critical_r");
    double expect_jump = s.param("jump");
    double below = s.param("probe_below");

    double jump = fam.distance(fam.at(rc - 1e-9), fam.at(rc)).value();
    auto probe_b = right_semicontinuity_probe(fam, below, 20);
    auto probe_c = right_semicontinuity_probe(fam, rc, 20);
    out.measured.push_back("jump at critical r=" + fmt(rc) + ": " + fmt(jump));
    out.measured.push_back(std::string("right_ok below critical: ") +
                           (probe_b.right_ok ? "yes" : "no"));
    out.measured.push_back(std::string("right_ok at critical: ") +
                           (probe_c.right_ok ? "yes" : "no"));
    out.matched = std::fabs(jump - expect_jump) <= 1e-9 && probe_b.right_ok && probe_c.right_ok;
    return out;
}

ScenarioOutcome run_lipschitz(const Scenario& s) {
    ScenarioOutcome out{false, s.expected, {}};
    BodyCurve fam(s.body_a, s.body_b, s.norm);
    auto rep = lipschitz_audit(fam, s.param("Q"), s.param("T"), s.param("q_prime"),
                               s.param("q"), s.param("t"), 64);
    if (!rep.precondition_ok) {
        out.measured.push_back("d_H(F_q', F_t) is infinite: no finite bound exists");
        return out;
    }
    out.measured.push_back("d = " + fmt(rep.d.value()) + ", M = " + fmt(rep.M) +
                           ", observed ratio = " + fmt(rep.observed_max_ratio));
    bool anchors_ok = true;
    if (s.params.count("M")) anchors_ok = anchors_ok && std::fabs(rep.M - s.param("M")) <= 1e-9;
    if (s.params.count("ratio"))
        anchors_ok = anchors_ok && std::fabs(rep.observed_max_ratio - s.param("ratio")) <= 1e-9;
    out.matched = rep.pass && anchors_ok;
    return out;
}

ScenarioOutcome run_infinite(const Scenario& s) {
    ScenarioOutcome out{false, s.expected, {}};
    double lo = s.param("window_min"), hi = s.param("window_max");
    int count = (int)s.param("window_count");
    double threshold = s.param("threshold");
    std::vector<double> windows;
    for (int i = 0; i < count; ++i) windows.push_back(lo + (hi - lo) * i / (count - 1));
    auto series = parabola_growth(s.parabola_r1, s.parabola_r2, windows, s.norm);
    std::string vals;
    for (double v : series.values) vals += (vals.empty() ? "" : ", ") + fmt(v);
    out.measured.push_back("windowed sup values: " + vals);
    out.measured.push_back("verdict: " + series.verdict());
    out.matched = series.strictly_increasing() && series.values.back() > threshold &&
                  series.verdict() == "unbounded";
    return out;
}

ScenarioOutcome run_finite(const Scenario& s) {
    ScenarioOutcome out{false, s.expected, {}};
    BodyCurve fam(s.body_a, s.body_b, s.norm);
    std::vector<double> radii{s.param("r1"), s.param("r2"), s.param("r3")};

    bool all_finite = true;
    for (size_t i = 0; i < radii.size() && all_finite; ++i)
        for (size_t j = i + 1; j < radii.size() && all_finite; ++j) {
            auto d = fam.distance(fam.at(radii[i]), fam.at(radii[j]));
            all_finite = d.is_finite();
            out.measured.push_back("d_H(F_" + fmt(radii[i]) + ", F_" + fmt(radii[j]) + ") = " +
                                   (d.is_finite() ? fmt(d.value()) : std::string("inf")));
        }

    auto verdict = continuity_criterion_check(fam, s.param("Q"), s.param("T"), radii);
    out.measured.push_back("continuity verdict: " + verdict.text);

    auto ha = s.body_a.halfspaces();
    auto hb = s.body_b.halfspaces();
    // Oracle-side membership for B_r(A): offset every halfplane of A by
    // r times the norm support of its normal. Exact when A is a halfplane
    // or a strip, which is all the finite-distance scenarios use.
    std::vector<double> sup_a;  // per-halfplane norm supports, hoisted out of the scan
    for (const Halfspace& h : ha) sup_a.push_back(s.norm.support(h.n));
    auto f_pred = [&](double r) {
        return oracle::SetPredicate([&, r](Vec2 p) {
            for (size_t i = 0; i < ha.size(); ++i)
                if (dot(ha[i].n, p) - ha[i].c > r * sup_a[i]) return false;
            for (const Halfspace& h : hb)
                if (dot(h.n, p) > h.c + kGeomEps) return false;
            return true;
        });
    };
    auto series = oracle::windowed_growth(f_pred(radii[0]), f_pred(radii[1]),
                                          {10, 20, 40, 80}, s.norm,
                                          s.param_or("steps_per_window", 1000.0));
    out.measured.push_back("windowed oracle verdict: " + series.verdict());
    out.matched = all_finite && verdict.continuous && series.verdict() == "plateau";
    return out;
}

}  // namespace

std::vector<std::string> scenario_names() {
    std::vector<std::string> names;
    for (const auto& e : kRegistry) names.push_back(e.name);
    std::sort(names.begin(), names.end());
    return names;
}

std::string scenario_source(const std::string& name) {
    for (const auto& e : kRegistry)
        if (name == e.name) return e.text;
    throw std::out_of_range("unknown scenario '" + name + "'");
}

Scenario load_scenario(const std::string& name) {
    Scenario sc = parse_scenario_text(scenario_source(name), name);
    sc.name = name;
    return sc;
}

ScenarioOutcome run_scenario(const Scenario& s) {
    try {
        switch (s.expected) {
            case ExpectedTag::LeftJump:
                return s.kind == ScenarioKind::PointCloud ? run_left_jump_cloud(s)
                                                          : run_left_jump_bodies(s);
            case ExpectedTag::RightJump: return run_right_jump_metric(s);
            case ExpectedTag::LipschitzPass: return run_lipschitz(s);
            case ExpectedTag::InfiniteDistance: return run_infinite(s);
            case ExpectedTag::FiniteDistance: return run_finite(s);
        }
    } catch (const std::exception& e) {
        ScenarioOutcome out{false, s.expected, {}};
        out.measured.push_back(std::string("analyzer error: ") + e.what());
        return out;
    }
    ScenarioOutcome out{false, s.expected, {}};
    out.measured.push_back("unhandled scenario shape");
    return out;
}

double parabola_boundary_distance(double x, double r_from, double r_to,
                                  const PolygonalNorm& n) {
    Vec2 p{x, x * x / r_from};
    if (p.y >= p.x * p.x / r_to) return 0.0;  // inside the target epigraph
    auto dist_at = [&](double t) { return n.eval(p - Vec2{t, t * t / r_to}); };
    // Coarse scan over the target boundary, then ternary refinement.
    double lo = -std::fabs(x) - 1.0, hi = std::fabs(x) + 1.0;
    const int steps = 400;
    double best_t = lo, best = dist_at(lo);
    for (int i = 1; i <= steps; ++i) {
        double t = lo + (hi - lo) * i / steps;
        double d = dist_at(t);
        if (d < best) {
            best = d;
            best_t = t;
        }
    }
    double span = (hi - lo) / steps;
    double a = best_t - span, b = best_t + span;
    for (int it = 0; it < 80; ++it) {
        double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
        if (dist_at(m1) <= dist_at(m2)) b = m2;
        else a = m1;
    }
    return dist_at((a + b) / 2.0);
}

double parabola_window_sup(double r_from, double r_to, double window,
                           const PolygonalNorm& n) {
    double best = 0.0;
    const int steps = 256;
    for (int i = 0; i <= steps; ++i) {
        double x = window * i / steps;
        best = std::max(best, parabola_boundary_distance(x, r_from, r_to, n));
    }
    return best;
}

oracle::WindowedGrowthSeries parabola_growth(double r1, double r2,
                                             const std::vector<double>& windows,
                                             const PolygonalNorm& n) {
    oracle::WindowedGrowthSeries out;
    for (double r : windows) {
        out.windows.push_back(r);
        out.steps.push_back(r / 1000.0);
        out.values.push_back(std::max(parabola_window_sup(r1, r2, r, n),
                                      parabola_window_sup(r2, r1, r, n)));
    }
    return out;
}

}  // namespace fr
