// Acceptance suite: one line per criterion, exit nonzero if any fails.
// Runs the full stack end to end, with brute-force oracles recomputed here
// rather than trusted from the library under test.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fr/curve.hpp"
#include "fr/oracle.hpp"
#include "fr/scenario.hpp"

using namespace fr;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- shared generators ----------------------------------------------------

std::shared_ptr<const FiniteMetricSpace> random_space(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> w(1, 64);
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d[i][j] = d[j][i] = w(rng) / 8.0;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return std::make_shared<FiniteMetricSpace>(std::move(labels), std::move(d));
}

SubsetMask random_mask(std::mt19937& rng, std::shared_ptr<const FiniteMetricSpace> sp) {
    std::bernoulli_distribution coin(0.4);
    std::vector<char> m(sp->size(), 0);
    bool any = false;
    for (auto& c : m) {
        c = coin(rng);
        any = any || c;
    }
    if (!any) m[rng() % m.size()] = 1;
    return SubsetMask(std::move(sp), std::move(m));
}

ConvexBody2 random_polygon(std::mt19937& rng, double span = 4.0) {
    std::uniform_int_distribution<int> lattice((int)(-span * 1024), (int)(span * 1024));
    while (true) {
        std::vector<Vec2> pts;
        int k = 3 + (int)(rng() % 8);
        for (int i = 0; i < k; ++i)
            pts.push_back({lattice(rng) / 1024.0, lattice(rng) / 1024.0});
        ConvexBody2 b = ConvexBody2::hull_of(pts);
        if (b.kind() == BodyKind::Polygon) return b;
    }
}

PolygonalNorm random_norm(std::mt19937& rng) {
    switch (rng() % 3) {
        case 0: return PolygonalNorm::sup();
        case 1: return PolygonalNorm::l1();
        default: return PolygonalNorm::euclid(8 + 2 * (int)(rng() % 12));
    }
}

// ---- criterion 1 ----------------------------------------------------------

double metric_hausdorff_brute(const SubsetMask& a, const SubsetMask& b) {
    const auto& sp = *a.space;
    std::vector<double> radii{0.0};
    for (size_t i = 0; i < sp.size(); ++i)
        for (size_t j = 0; j < sp.size(); ++j) radii.push_back(sp.dist(i, j));
    std::sort(radii.begin(), radii.end());
    for (double r : radii) {
        bool ok = true;
        for (size_t i = 0; i < sp.size() && ok; ++i) {
            if (a.contains(i)) {
                bool hit = false;
                for (size_t j = 0; j < sp.size(); ++j)
                    if (b.contains(j) && sp.dist(i, j) <= r) hit = true;
                ok = ok && hit;
            }
            if (b.contains(i)) {
                bool hit = false;
                for (size_t j = 0; j < sp.size(); ++j)
                    if (a.contains(j) && sp.dist(i, j) <= r) hit = true;
                ok = ok && hit;
            }
        }
        if (ok) return r;
    }
    return radii.back();
}

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(101);
    bool ok = true;
    for (int trial = 0; trial < 50 && ok; ++trial) {
        auto sp = random_space(rng, 3 + (int)(rng() % 38));
        SubsetMask a = random_mask(rng, sp);
        SubsetMask b = random_mask(rng, sp);
        ok = ok && hausdorff(a, b).value() == metric_hausdorff_brute(a, b);

        double r = set_separation(a, b) + (1 + (int)(rng() % 16)) / 8.0;
        SubsetMask got = f_r(a, b, r);
        for (size_t p = 0; p < sp->size() && ok; ++p) {
            bool expect = false;
            if (b.contains(p))
                for (size_t q = 0; q < sp->size(); ++q)
                    if (a.contains(q) && sp->dist(p, q) <= r) expect = true;
            ok = ok && got.contains(p) == expect;
        }
    }
    double dt = seconds_since(t0);
    char buf[96];
    std::snprintf(buf, sizeof buf, "50 spaces, exact match, %.2f s", dt);
    report(1, "metric oracle equivalence", ok && dt < 10.0, buf);
}

// ---- criterion 2 ----------------------------------------------------------

void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(202);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        ConvexBody2 a = random_polygon(rng);
        PolygonalNorm n = random_norm(rng);
        double r1 = (1 + (int)(rng() % 16)) / 8.0;
        double r2 = (1 + (int)(rng() % 16)) / 8.0;
        ConvexBody2 two_step = minkowski_neighborhood(minkowski_neighborhood(a, n, r1), n, r2);
        ConvexBody2 direct = minkowski_neighborhood(a, n, r1 + r2);
        worst = std::max(worst, hausdorff_bodies(two_step, direct, n).value());
    }
    double dt = seconds_since(t0);
    char buf[96];
    std::snprintf(buf, sizeof buf, "max gap %.2e over 100 cases, %.2f s", worst, dt);
    report(2, "neighborhood composition law", worst <= 1e-7 && dt < 30.0, buf);
}

// ---- criterion 3 ----------------------------------------------------------

void criterion_3() {
    std::mt19937 rng(303);
    double worst = 0.0;
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
        ConvexBody2 a = random_polygon(rng);
        PolygonalNorm n = random_norm(rng);
        double r = (2 + (int)(rng() % 16)) / 8.0;
        auto rep = is_interior_equal_open_nbhd(a, n, r, 64, 1e-7);
        ok = ok && rep.pass;
        worst = std::max(worst, rep.max_boundary_error);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "max boundary error %.2e over 50 bodies", worst);
    report(3, "open neighborhood is the interior", ok && worst <= 1e-7, buf);
}

// ---- criterion 4 ----------------------------------------------------------

void criterion_4() {
    BodyCurve strip(ConvexBody2::box(0, 0, 1, 1), ConvexBody2::box(0, 0, 10, 1),
                    PolygonalNorm::sup());
    auto rep = lipschitz_audit(strip, 0.5, 6.0, 1.0, 2.0, 5.0, 256);
    bool ok = rep.precondition_ok && std::fabs(rep.M - 4.0) <= 1e-9 &&
              std::fabs(rep.observed_max_ratio - 1.0) <= 1e-9 && rep.pass;

    std::mt19937 rng(404);
    double worst_excess = -1e300;
    for (int trial = 0; trial < 20 && ok; ++trial) {
        ConvexBody2 a = random_polygon(rng);
        ConvexBody2 b = random_polygon(rng, 6.0);
        PolygonalNorm n = random_norm(rng);
        BodyCurve fam(a, b, n);
        double s = fam.separation();
        double Q = s + 0.25, qp = s + 0.5, q = s + 0.75, t = q + 2.0, T = t + 0.5;
        auto r = lipschitz_audit(fam, Q, T, qp, q, t, 256, 1e-7);
        ok = ok && r.precondition_ok && r.pass;
        worst_excess = std::max(worst_excess, r.observed_max_ratio - r.M);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "strip M=4 ratio 1.0; max(observed-M)=%.2e over 20 sweeps",
                  worst_excess);
    report(4, "Lipschitz bound M = d/(q-q')", ok, buf);
}

// ---- criterion 5 ----------------------------------------------------------

void criterion_5() {
    bool ok = true;
    double worst = 0.0;
    auto check_probe = [&](auto&& fam, double s) {
        auto rep = right_semicontinuity_probe(fam, s, 20);
        ok = ok && rep.right_ok;
        if (rep.gaps.back().is_finite()) worst = std::max(worst, rep.gaps.back().value());
    };
    auto five = [&](auto&& fam, double lo, double step) {
        for (int k = 0; k < 5; ++k) check_probe(fam, lo + k * step);
    };

    Scenario strip = load_scenario("strip_rect");
    five(BodyCurve(strip.body_a, strip.body_b, strip.norm), 0.5, 0.75);
    Scenario sat = load_scenario("saturated");
    five(BodyCurve(sat.body_a, sat.body_b, sat.norm), 0.5, 0.75);
    Scenario fig = load_scenario("fig1_rect_triangle");
    five(BodyCurve(fig.body_a, fig.body_b, fig.norm), 0.7, 0.5);
    Scenario two = load_scenario("ex_second_nonconvex");
    five(PointCloudCurve(two.body_a, two.cloud_b, two.norm), 1.5, 0.9);
    Scenario punct = load_scenario("ex_first_punctured_line");
    five(MaskCurve(punct.mask_a, punct.mask_b), 0.5, 0.5);

    char buf[96];
    std::snprintf(buf, sizeof buf, "max final gap %.2e at k=20 over 25 probes", worst);
    report(5, "right semicontinuity", ok && worst <= 1e-3, buf);
}

// ---- criterion 6 ----------------------------------------------------------

void criterion_6() {
    Scenario s = load_scenario("ex_second_nonconvex");
    PointCloudCurve fam(s.body_a, s.cloud_b, s.norm);
    double left = fam.distance(fam.at(5.0 - 1e-7), fam.at(5.0)).value();
    auto probe = right_semicontinuity_probe(fam, 5.0, 20);
    double right = probe.gaps.back().value();
    bool ok = std::fabs(left - 4.0) <= 1e-6 && right < 1e-3;
    char buf[96];
    std::snprintf(buf, sizeof buf, "left jump %.9f, right gap %.2e", left, right);
    report(6, "two-point left jump at r=5", ok, buf);
}

// ---- criterion 7 ----------------------------------------------------------

void criterion_7() {
    Scenario s = load_scenario("fig1_rect_triangle");
    BodyCurve fam(s.body_a, s.body_b, s.norm);
    std::vector<double> grid;
    for (int i = 0; i < 512; ++i) grid.push_back(0.25 + (3.0 - 0.25) * i / 511.0);
    auto samples = sample_curve(fam, grid);
    double best = 0.0;
    for (size_t i = 1; i < samples.size(); ++i)
        best = std::max(best, samples[i].dh_to_prev->value() / (samples[i].r - samples[i - 1].r));
    char buf[96];
    std::snprintf(buf, sizeof buf, "max gap/step ratio %.3f on 512 samples", best);
    report(7, "figure-1 gap exceeds the step", best >= 2.0, buf);
}

// ---- criterion 8 ----------------------------------------------------------

void criterion_8() {
    std::vector<double> windows;
    for (int r = 10; r <= 100; r += 10) windows.push_back(r);
    auto series = parabola_growth(1.0, 2.0, windows, PolygonalNorm::euclid(64));
    bool ok = series.strictly_increasing() && series.values.back() > 20.0;
    char buf[96];
    std::snprintf(buf, sizeof buf, "increasing, value %.3f at R=100", series.values.back());
    report(8, "parabola windowed growth", ok, buf);
}

// ---- criterion 9 ----------------------------------------------------------

struct UnboundedCase {
    std::vector<Halfspace> a, b;
    PolygonalNorm norm;
    std::vector<double> radii;
};

void criterion_9() {
    PolygonalNorm e64 = PolygonalNorm::euclid(64);
    PolygonalNorm sup = PolygonalNorm::sup();
    PolygonalNorm l1 = PolygonalNorm::l1();
    // A is always a halfplane or a strip so the oracle-side neighborhood
    // predicate (per-halfplane offset by r * support) is exact.
    std::vector<UnboundedCase> cases{
        {{{{0, 1}, 0}}, {{{0, -1}, 1}}, e64, {1, 2, 3}},
        {{{{0, 1}, 0}}, {{{-1, 0}, 0}}, e64, {1, 2, 3}},
        {{{{1, 1}, 0}}, {{{1, -1}, 0}}, e64, {1, 2, 3}},
        {{{{0, 1}, 0}}, {{{0, -1}, -0.5}}, sup, {1, 2, 3}},
        {{{{0, 1}, 1}, {{0, -1}, 1}}, {{{-1, 0}, 0}}, e64, {1, 2, 3}},
        {{{{0, 1}, 0}}, {{{-1, 0}, 0}, {{1, 0}, 5}}, sup, {1, 2, 3}},
        {{{{1, 0}, 0}}, {{{1, -1}, 0}}, e64, {1, 2, 3}},
        {{{{-1, 1}, 0}}, {{{0, 1}, 0}}, l1, {1, 2, 3}},
        {{{{1, 0}, 1}, {{-1, 0}, 0}}, {{{0, -1}, 0}}, sup, {1, 2, 3}},
        {{{{0, 1}, -2}}, {{{0, 1}, 0}, {{-1, 0}, 0}}, e64, {1, 2, 3}},
    };

    bool all_finite = true, all_plateau = true;
    for (const UnboundedCase& c : cases) {
        ConvexBody2 a = ConvexBody2::plane(), b = ConvexBody2::plane();
        for (const Halfspace& h : c.a) a = clip(a, h);
        for (const Halfspace& h : c.b) b = clip(b, h);
        BodyCurve fam(a, b, c.norm);
        std::vector<ConvexBody2> sets;
        for (double r : c.radii) sets.push_back(fam.at(r));
        for (size_t i = 0; i < sets.size(); ++i)
            for (size_t j = i + 1; j < sets.size(); ++j)
                all_finite = all_finite && fam.distance(sets[i], sets[j]).is_finite();

        std::vector<double> sup_a;
        for (const Halfspace& h : c.a) sup_a.push_back(c.norm.support(h.n));
        auto f_pred = [&](double r) {
            return oracle::SetPredicate([&, r](Vec2 p) {
                for (size_t i = 0; i < c.a.size(); ++i)
                    if (dot(c.a[i].n, p) - c.a[i].c > r * sup_a[i]) return false;
                for (const Halfspace& h : c.b)
                    if (dot(h.n, p) > h.c + kGeomEps) return false;
                return true;
            });
        };
        auto series = oracle::windowed_growth(f_pred(c.radii[0]), f_pred(c.radii[1]),
                                              {10, 20, 40, 80}, c.norm);
        all_plateau = all_plateau && series.verdict() == "plateau";
    }
    report(9, "planar unbounded pairs stay finite",
           all_finite && all_plateau,
           std::string(all_finite ? "all pairs finite" : "infinite pair found") + ", " +
               (all_plateau ? "all windows plateau" : "a window series failed to plateau"));
}

// ---- criterion 10 ---------------------------------------------------------

void criterion_10() {
    std::mt19937 rng(1010);
    std::uniform_real_distribution<double> tt(0.0, 1.0), px(-8.0, 12.0), py(-8.0, 12.0);
    bool ok = true;
    double worst = -1e300;
    for (const char* name : {"strip_rect", "saturated", "fig1_rect_triangle",
                             "dim2_unbounded_finite"}) {
        Scenario s = load_scenario(name);
        BodyCurve fam(s.body_a, s.body_b, s.norm);
        double lo = fam.separation() + 0.25, hi = fam.separation() + 4.0;
        std::uniform_real_distribution<double> rad(lo, hi);
        std::vector<ConvexityTriple> triples;
        for (int i = 0; i < 1000; ++i) triples.push_back({rad(rng), rad(rng), tt(rng)});
        auto rep = convexity_audit(fam, {px(rng), py(rng)}, triples, 1e-7);
        ok = ok && rep.pass;
        worst = std::max(worst, rep.max_violation);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "max violation %.2e over 4x1000 triples", worst);
    report(10, "distance to F_r is convex in r", ok && worst <= 1e-7, buf);
}

// ---- criterion 11 ---------------------------------------------------------

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_tool(const std::string& args) {
    std::string cmd = std::string(TOOL_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

void criterion_11() {
    std::string tmp1 = "acceptance_sweep_1.csv", tmp2 = "acceptance_sweep_2.csv";
    run_tool("sweep strip_rect --r-min 1 --r-max 5 --samples 32 --seed 7 --csv " + tmp1);
    run_tool("sweep strip_rect --r-min 1 --r-max 5 --samples 32 --seed 7 --csv " + tmp2);
    std::string a = slurp(tmp1), b = slurp(tmp2);
    bool identical = !a.empty() && a == b;

    run_tool("sweep ex_parabola_3d --r-min 1 --r-max 2 --samples 4 --csv " + tmp1);
    std::string parab = slurp(tmp1);
    bool inf_token = parab.find(",inf,") != std::string::npos &&
                     a.find("inf") == std::string::npos;

    bool codes_ok = run_tool("reproduce strip_rect") == 0 &&
                    run_tool("reproduce nonexistent") == 2 &&
                    run_tool("sweep strip_rect --r-min 0 --r-max 1 --samples 4") == 2 &&
                    run_tool("audit strip_rect --Q 0.5 --T 6 --expect continuous") == 0 &&
                    run_tool("audit strip_rect --Q 0.5 --T 6 --expect discontinuous") == 1 &&
                    run_tool("audit ex_parabola_3d --Q 0.5 --T 6 --expect discontinuous") == 0;

    std::remove(tmp1.c_str());
    std::remove(tmp2.c_str());
    report(11, "CLI determinism and exit codes", identical && inf_token && codes_ok,
           std::string(identical ? "byte-identical CSV" : "CSV bytes differ") + ", " +
               (inf_token ? "inf token correct" : "inf token wrong") + ", " +
               (codes_ok ? "exit codes 0/1/2 verified" : "exit code mismatch"));
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    std::printf("total: %d/11 passed in %.1f s\n", 11 - g_failures, seconds_since(t0));
    return g_failures == 0 ? 0 : 1;
}
