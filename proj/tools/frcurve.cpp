#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fr/csv.hpp"
#include "fr/curve.hpp"
#include "fr/scenario.hpp"
#include "fr/svg.hpp"

namespace {

constexpr int kExitMatch = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << data;
}

fr::Scenario resolve_scenario(const std::string& name, const std::string& file) {
    if (!file.empty()) return fr::parse_scenario_text(read_file(file), file);
    return fr::load_scenario(name);
}

// Frame path "out.svg" -> "out_007.svg".
std::string frame_path(const std::string& base, size_t index) {
    char suffix[16];
    std::snprintf(suffix, sizeof suffix, "_%03zu", index);
    size_t dot = base.find_last_of('.');
    if (dot == std::string::npos) return base + suffix;
    return base.substr(0, dot) + suffix + base.substr(dot);
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i)
        out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    return out;
}

struct SweepResult {
    std::vector<fr::CsvRow> rows;
    std::vector<fr::ConvexBody2> frames;  // empty for non-geometric kinds
};

template <class Fam>
void fill_rows(const Fam& fam, const std::vector<double>& grid, SweepResult& out,
               bool keep_bodies) {
    auto samples = fr::sample_curve(fam, grid);
    for (const auto& s : samples) {
        fr::CsvRow row;
        row.r = s.r;
        row.dh_prev = s.dh_to_prev;
        row.empty = s.empty;
        row.vertices = s.size;
        out.rows.push_back(row);
        if constexpr (std::is_same_v<Fam, fr::BodyCurve>) {
            if (keep_bodies) out.frames.push_back(s.set);
        }
    }
}

SweepResult run_sweep(const fr::Scenario& sc, double r_min, double r_max, int samples,
                      bool keep_bodies) {
    SweepResult out;
    std::vector<double> grid = linspace(r_min, r_max, samples);
    switch (sc.kind) {
        case fr::ScenarioKind::Convex2d:
            fill_rows(fr::BodyCurve(sc.body_a, sc.body_b, sc.norm), grid, out, keep_bodies);
            break;
        case fr::ScenarioKind::PointCloud:
            fill_rows(fr::PointCloudCurve(sc.body_a, sc.cloud_b, sc.norm), grid, out, false);
            break;
        case fr::ScenarioKind::Metric:
            fill_rows(fr::MaskCurve(sc.mask_a, sc.mask_b), grid, out, false);
            break;
        case fr::ScenarioKind::Predicate: {
            // Any two distinct parabola sections are infinitely far apart.
            if (!(r_min > 0.0)) throw std::domain_error("radius below separation");
            for (size_t i = 0; i < grid.size(); ++i) {
                fr::CsvRow row;
                row.r = grid[i];
                if (i > 0) row.dh_prev = fr::HausdorffValue::infinite();
                out.rows.push_back(row);
            }
            break;
        }
    }
    return out;
}

int cmd_reproduce(const std::string& name, const std::string& file, const std::string& svg_path,
                  std::optional<double> steps_per_window,
                  const std::vector<double>& windows) {
    fr::Scenario sc = resolve_scenario(name, file);
    if (steps_per_window) sc.params["steps_per_window"] = *steps_per_window;
    if (!windows.empty()) {
        sc.params["window_min"] = windows.front();
        sc.params["window_max"] = windows.back();
        sc.params["window_count"] = (double)windows.size();
    }
    fr::ScenarioOutcome outcome = fr::run_scenario(sc);
    std::cout << "scenario: " << sc.name << "\n";
    std::cout << "expected: " << fr::tag_name(outcome.expected) << "\n";
    for (const std::string& line : outcome.measured) std::cout << "  " << line << "\n";
    std::cout << "result: " << (outcome.matched ? "match" : "MISMATCH") << "\n";
    if (!svg_path.empty() &&
        (sc.kind == fr::ScenarioKind::Convex2d || sc.kind == fr::ScenarioKind::PointCloud)) {
        std::vector<fr::SvgLayer> layers{{sc.body_a, "#4477aa", 0.5}};
        if (sc.kind == fr::ScenarioKind::Convex2d)
            layers.push_back({sc.body_b, "#ee6677", 0.5});
        else
            for (fr::Vec2 p : sc.cloud_b) layers.push_back({fr::ConvexBody2::point(p), "#ee6677", 0.9});
        write_file(svg_path, fr::render_svg(layers, {0, 0}, 12.0));
    }
    return outcome.matched ? kExitMatch : kExitMismatch;
}

int cmd_sweep(const std::string& name, const std::string& file, double r_min, double r_max,
              int samples, const std::string& csv_path, const std::string& svg_path) {
    fr::Scenario sc = resolve_scenario(name, file);
    SweepResult res;
    try {
        res = run_sweep(sc, r_min, r_max, samples, !svg_path.empty());
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::string csv = fr::format_curve_csv(res.rows);
    if (!csv_path.empty())
        write_file(csv_path, csv);
    else
        std::cout << csv;
    if (!svg_path.empty()) {
        for (size_t i = 0; i < res.frames.size(); ++i) {
            std::vector<fr::SvgLayer> layers{{sc.body_a, "#4477aa", 0.35},
                                             {sc.body_b, "#ee6677", 0.35},
                                             {res.frames[i], "#228833", 0.6}};
            write_file(frame_path(svg_path, i), fr::render_svg(layers, {0, 0}, 12.0));
        }
    }
    return kExitMatch;
}

int cmd_audit(const std::string& name, const std::string& file, double Q, double T,
              int probes, const std::string& expect) {
    fr::Scenario sc = resolve_scenario(name, file);
    std::string verdict;
    if (sc.kind == fr::ScenarioKind::Predicate) {
        auto series = fr::parabola_growth(sc.parabola_r1, sc.parabola_r2,
                                          {10, 20, 40, 80}, sc.norm);
        verdict = series.verdict() == "unbounded" ? "discontinuous — infinite distance"
                                                  : "continuous";
        std::cout << "verdict: " << verdict << " (empirical)\n";
    } else {
        std::vector<double> probe_radii = linspace(Q + (T - Q) / (probes + 1.0),
                                                   T - (T - Q) / (probes + 1.0), probes);
        fr::ContinuityVerdict v;
        if (sc.kind == fr::ScenarioKind::Convex2d) {
            fr::BodyCurve fam(sc.body_a, sc.body_b, sc.norm);
            if (!(Q > fam.separation())) {
                std::cerr << "error: radius below separation\n";
                return kExitUsage;
            }
            v = fr::continuity_criterion_check(fam, Q, T, probe_radii);
        } else if (sc.kind == fr::ScenarioKind::Metric) {
            fr::MaskCurve fam(sc.mask_a, sc.mask_b);
            v = fr::continuity_criterion_check(fam, Q, T, probe_radii);
        } else {
            fr::PointCloudCurve fam(sc.body_a, sc.cloud_b, sc.norm);
            v = fr::continuity_criterion_check(fam, Q, T, probe_radii);
        }
        verdict = v.continuous ? "continuous" : v.text;
        std::cout << "verdict: " << v.text << " (empirical)\n";
        if (v.offending_pair)
            std::cout << "offending pair: r=" << fmt(v.offending_pair->first)
                      << ", r=" << fmt(v.offending_pair->second) << "\n";
        for (const auto& rep : v.interval_audits)
            std::cout << "interval [" << fmt(rep.q) << ", " << fmt(rep.t) << "]: M=" << fmt(rep.M)
                      << " observed=" << fmt(rep.observed_max_ratio)
                      << (rep.pass ? " pass" : " fail") << "\n";
    }
    if (!expect.empty()) {
        bool is_continuous = verdict == "continuous";
        bool want_continuous = expect == "continuous";
        if (is_continuous != want_continuous) return kExitMismatch;
    }
    return kExitMatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"F_r(A,B) curve explorer: scenarios, sweeps, and continuity audits"};
    app.require_subcommand(1);

    std::string name, file, csv_path, svg_path, expect;
    double r_min = 0.0, r_max = 1.0, Q = 0.0, T = 1.0;
    double grid_step = 0.0;
    int samples = 64, probes = 5;
    unsigned seed = 0;

    auto* rep = app.add_subcommand("reproduce", "run a named scenario and check its expected tag");
    rep->add_option("name", name, "registered scenario name");
    rep->add_option("--file", file, "scenario file overriding the registry");
    rep->add_option("--grid-step", grid_step, "oracle grid step at the smallest window");
    std::vector<double> windows;
    rep->add_option("--windows", windows,
                    "growth windows; first, last, and count are taken from the list");
    rep->add_option("--svg", svg_path, "write an overview SVG");
    rep->add_option("--seed", seed, "seed recorded for determinism (no randomness used)");

    auto* swp = app.add_subcommand("sweep", "sample the curve r -> F_r and emit CSV");
    swp->add_option("name", name, "registered scenario name");
    swp->add_option("--file", file, "scenario file overriding the registry");
    swp->add_option("--r-min", r_min, "first radius")->required();
    swp->add_option("--r-max", r_max, "last radius")->required();
    swp->add_option("--samples", samples, "sample count");
    swp->add_option("--csv", csv_path, "CSV output path (stdout when omitted)");
    swp->add_option("--svg", svg_path, "per-sample SVG frame path pattern");
    swp->add_option("--seed", seed, "seed recorded for determinism (no randomness used)");

    auto* aud = app.add_subcommand("audit", "continuity criterion verdict on (Q, T)");
    aud->add_option("name", name, "registered scenario name");
    aud->add_option("--file", file, "scenario file overriding the registry");
    aud->add_option("--Q", Q, "interval left end")->required();
    aud->add_option("--T", T, "interval right end")->required();
    aud->add_option("--probes", probes, "number of probe radii");
    aud->add_option("--expect", expect, "continuous | discontinuous")
        ->check(CLI::IsMember({"continuous", "discontinuous"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (rep->parsed()) {
            std::optional<double> spw;
            if (grid_step > 0.0) spw = 10.0 / grid_step;
            return cmd_reproduce(name, file, svg_path, spw, windows);
        }
        if (swp->parsed()) return cmd_sweep(name, file, r_min, r_max, samples, csv_path, svg_path);
        return cmd_audit(name, file, Q, T, probes, expect);
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
