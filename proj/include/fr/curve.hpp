#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <type_traits>
#include <stdexcept>
#include <string>
#include <vector>

#include "fr/body.hpp"
#include "fr/metric.hpp"

namespace fr {

// A curve family evaluates r |-> F_r(A, B) in one of the three set
// representations and knows how to measure distances between its values.
// Required interface:
//   using Set = ...;
//   Set at(double r) const;
//   bool set_empty(const Set&) const;
//   size_t set_size(const Set&) const;
//   HausdorffValue distance(const Set&, const Set&) const;
//   double separation() const;     // |A B|
//   bool compact_b() const;

template <class Set>
struct CurveSample {
    double r = 0.0;
    Set set;
    bool empty = false;
    size_t size = 0;
    std::optional<HausdorffValue> dh_to_prev;  // absent for the first sample
};

// Geometric family over convex polyhedral bodies.
class BodyCurve {
public:
    using Set = ConvexBody2;

    BodyCurve(ConvexBody2 a, ConvexBody2 b, PolygonalNorm n)
        : a_(std::move(a)), b_(std::move(b)), n_(std::move(n)) {
        if (a_.is_empty() || b_.is_empty())
            throw std::invalid_argument("curve requires nonempty A and B");
        sep_ = body_separation(a_, b_, n_);
    }

    const ConvexBody2& a() const { return a_; }
    const ConvexBody2& b() const { return b_; }
    const PolygonalNorm& norm() const { return n_; }

    Set at(double r) const { return intersect(minkowski_neighborhood(a_, n_, r), b_); }
    bool set_empty(const Set& s) const { return s.is_empty(); }
    size_t set_size(const Set& s) const { return s.verts().size(); }
    HausdorffValue distance(const Set& s, const Set& t) const {
        return hausdorff_bodies(s, t, n_);
    }
    double separation() const { return sep_; }
    bool compact_b() const { return b_.is_bounded(); }

    double point_distance(Vec2 x, const Set& s) const {
        HausdorffValue d = dist_point_body(x, s, n_);
        return d.value();
    }

    // All sweep values are clips of neighborhoods of A against B, so their
    // face normals come from A, B, and the unit ball. A shared support
    // table over that direction set makes pairwise Hausdorff distances on a
    // sweep cheap and stays exact.
    struct SupportTable {
        std::vector<Vec2> dirs;
        std::vector<double> ball_support;              // support of the unit ball per dir
        std::vector<std::vector<std::optional<double>>> rows;  // per sample, per dir
    };

    SupportTable support_table(const std::vector<Set>& sets) const {
        SupportTable t;
        auto add = [&](Vec2 u) {
            for (Vec2 v : t.dirs)
                if (same_dir(v, u)) return;
            t.dirs.push_back(canonical_dir(u));
        };
        for (Vec2 u : a_.face_normals()) add(u);
        for (Vec2 u : b_.face_normals()) add(u);
        for (Vec2 u : n_.edge_functionals()) add(u);
        for (Vec2 u : t.dirs) t.ball_support.push_back(n_.support(u));
        for (const Set& s : sets) {
            std::vector<std::optional<double>> row;
            row.reserve(t.dirs.size());
            for (Vec2 u : t.dirs) row.push_back(s.support(u));
            t.rows.push_back(std::move(row));
        }
        return t;
    }

    static double table_ratio(const SupportTable& t, size_t i, size_t j) {
        double m = 0.0;
        for (size_t k = 0; k < t.dirs.size(); ++k) {
            const auto& si = t.rows[i][k];
            const auto& sj = t.rows[j][k];
            if (!si || !sj) continue;  // shared unbounded direction
            m = std::max(m, std::fabs(*si - *sj) / t.ball_support[k]);
        }
        return m;
    }

private:
    ConvexBody2 a_, b_;
    PolygonalNorm n_;
    double sep_ = 0.0;
};

// Finite-metric-space family over subset masks.
class MaskCurve {
public:
    using Set = SubsetMask;

    MaskCurve(SubsetMask a, SubsetMask b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.is_empty() || b_.is_empty())
            throw std::invalid_argument("curve requires nonempty A and B");
        sep_ = set_separation(a_, b_);
    }

    Set at(double r) const { return f_r(a_, b_, r); }
    bool set_empty(const Set& s) const { return s.is_empty(); }
    size_t set_size(const Set& s) const { return s.count(); }
    HausdorffValue distance(const Set& s, const Set& t) const { return hausdorff(s, t); }
    double separation() const { return sep_; }
    bool compact_b() const { return true; }

private:
    SubsetMask a_, b_;
    double sep_ = 0.0;
};

// Convex body A against a finite point set B (B need not be convex; this is
// the family where left jumps from newly acquired components live).
class PointCloudCurve {
public:
    using Set = std::vector<Vec2>;

    PointCloudCurve(ConvexBody2 a, std::vector<Vec2> b, PolygonalNorm n)
        : a_(std::move(a)), b_(std::move(b)), n_(std::move(n)) {
        if (a_.is_empty() || b_.empty())
            throw std::invalid_argument("curve requires nonempty A and B");
        sep_ = dist_point_body(b_.front(), a_, n_).value();
        for (Vec2 p : b_) sep_ = std::min(sep_, dist_point_body(p, a_, n_).value());
    }

    Set at(double r) const {
        if (!(r > sep_)) throw std::domain_error("radius below separation");
        Set out;
        for (Vec2 p : b_)
            if (dist_point_body(p, a_, n_).value() <= r + kGeomEps) out.push_back(p);
        return out;
    }
    bool set_empty(const Set& s) const { return s.empty(); }
    size_t set_size(const Set& s) const { return s.size(); }
    HausdorffValue distance(const Set& s, const Set& t) const {
        if (s.empty() || t.empty())
            throw std::invalid_argument("hausdorff requires nonempty sets");
        double m = 0.0;
        auto directed = [&](const Set& from, const Set& to) {
            for (Vec2 p : from) {
                double best = n_.eval(p - to.front());
                for (Vec2 q : to) best = std::min(best, n_.eval(p - q));
                m = std::max(m, best);
            }
        };
        directed(s, t);
        directed(t, s);
        return HausdorffValue::finite(m);
    }
    double separation() const { return sep_; }
    bool compact_b() const { return true; }

private:
    ConvexBody2 a_;
    std::vector<Vec2> b_;
    PolygonalNorm n_;
    double sep_ = 0.0;
};

template <class Fam>
std::vector<CurveSample<typename Fam::Set>>
sample_curve(const Fam& fam, const std::vector<double>& r_grid) {
    for (size_t i = 0; i < r_grid.size(); ++i) {
        if (!(r_grid[i] > fam.separation())) throw std::domain_error("radius below separation");
        if (i > 0 && !(r_grid[i] > r_grid[i - 1]))
            throw std::invalid_argument("radii must be strictly increasing");
    }
    std::vector<CurveSample<typename Fam::Set>> out;
    out.reserve(r_grid.size());
    for (double r : r_grid) {
        CurveSample<typename Fam::Set> s;
        s.r = r;
        s.set = fam.at(r);
        s.empty = fam.set_empty(s.set);
        s.size = fam.set_size(s.set);
        if (!out.empty()) s.dh_to_prev = fam.distance(out.back().set, s.set);
        out.push_back(std::move(s));
    }
    return out;
}

struct SemicontinuityReport {
    double s = 0.0;
    std::vector<double> deltas;
    std::vector<HausdorffValue> gaps;       // d_H(F_s, F_{s+delta})
    bool right_ok = false;
    std::vector<double> left_deltas;        // only those with s - delta > |A B|
    std::vector<HausdorffValue> left_gaps;  // d_H(F_{s-delta}, F_s)
    std::optional<double> left_jump;        // last finite left gap
    bool unbounded_b_warning = false;       // guarantee only covers compact B
};

template <class Fam>
SemicontinuityReport right_semicontinuity_probe(const Fam& fam, double s, int k_max,
                                                double tol = 1e-3) {
    if (!(s > fam.separation())) throw std::domain_error("radius below separation");
    SemicontinuityReport rep;
    rep.s = s;
    rep.unbounded_b_warning = !fam.compact_b();
    auto fs = fam.at(s);
    for (int k = 1; k <= k_max; ++k) {
        double d = std::ldexp(1.0, -k);
        rep.deltas.push_back(d);
        rep.gaps.push_back(fam.distance(fs, fam.at(s + d)));
        if (s - d > fam.separation()) {
            rep.left_deltas.push_back(d);
            rep.left_gaps.push_back(fam.distance(fam.at(s - d), fs));
        }
    }
    const HausdorffValue& last = rep.gaps.back();
    rep.right_ok = last.is_finite() && last.value() <= tol;
    if (!rep.left_gaps.empty() && rep.left_gaps.back().is_finite())
        rep.left_jump = rep.left_gaps.back().value();
    return rep;
}

struct Discontinuity {
    double r_left = 0.0;
    double r_right = 0.0;
    HausdorffValue gap;
};

// Consecutive pairs whose gap exceeds jump_threshold times the step (a
// ratio, so detection does not depend on the grid resolution).
template <class Set>
std::vector<Discontinuity>
detect_discontinuities(const std::vector<CurveSample<Set>>& samples, double jump_threshold) {
    if (samples.size() < 2) throw std::invalid_argument("need at least two samples");
    std::vector<Discontinuity> out;
    for (size_t i = 1; i < samples.size(); ++i) {
        const auto& g = samples[i].dh_to_prev;
        if (!g) continue;
        double step = samples[i].r - samples[i - 1].r;
        if (g->is_infinite() || g->value() > jump_threshold * step)
            out.push_back({samples[i - 1].r, samples[i].r, *g});
    }
    return out;
}

struct ConvexityReport {
    bool pass = false;
    double max_violation = 0.0;
    size_t checked = 0;
};

struct ConvexityTriple {
    double r1 = 0.0, r2 = 0.0, t = 0.5;
};

// Midpoint-style convexity of f(x, r) = dist(x, F_r) in r.
inline ConvexityReport convexity_audit(const BodyCurve& fam, Vec2 x,
                                       const std::vector<ConvexityTriple>& triples,
                                       double tol = 1e-7) {
    ConvexityReport rep;
    for (const auto& tr : triples) {
        if (!(tr.r1 > fam.separation()) || !(tr.r2 > fam.separation()))
            throw std::domain_error("radius below separation");
        if (!(tr.t >= 0.0 && tr.t <= 1.0)) throw std::invalid_argument("t must be in [0,1]");
        double rm = (1.0 - tr.t) * tr.r1 + tr.t * tr.r2;
        double fm = fam.point_distance(x, fam.at(rm));
        double f1 = fam.point_distance(x, fam.at(tr.r1));
        double f2 = fam.point_distance(x, fam.at(tr.r2));
        rep.max_violation = std::max(rep.max_violation,
                                     fm - ((1.0 - tr.t) * f1 + tr.t * f2));
        ++rep.checked;
    }
    rep.pass = rep.max_violation <= tol;
    return rep;
}

struct LipschitzReport {
    double Q = 0.0, T = 0.0;
    double q_prime = 0.0, q = 0.0, t = 0.0;
    HausdorffValue d;                // d_H(F_{q'}, F_t)
    double M = 0.0;                  // d / (q - q')
    double observed_max_ratio = 0.0; // max over sampled pairs of dH / |dr|
    bool precondition_ok = false;    // d finite, anchors ordered
    bool pass = false;
};

namespace detail {

template <class Fam>
double pairwise_max_ratio(const Fam& fam, const std::vector<double>& radii,
                          const std::vector<typename Fam::Set>& sets) {
    double m = 0.0;
    if constexpr (std::is_same_v<Fam, BodyCurve>) {
        auto table = fam.support_table(sets);
        for (size_t i = 0; i < sets.size(); ++i)
            for (size_t j = i + 1; j < sets.size(); ++j)
                m = std::max(m, BodyCurve::table_ratio(table, i, j) / (radii[j] - radii[i]));
    } else {
        for (size_t i = 0; i < sets.size(); ++i)
            for (size_t j = i + 1; j < sets.size(); ++j) {
                HausdorffValue d = fam.distance(sets[i], sets[j]);
                if (d.is_infinite()) return std::numeric_limits<double>::infinity();
                m = std::max(m, d.value() / (radii[j] - radii[i]));
            }
    }
    return m;
}

}  // namespace detail

template <class Fam>
LipschitzReport lipschitz_audit(const Fam& fam, double Q, double T, double q_prime,
                                double q, double t, int sample_count, double tol = 1e-7) {
    LipschitzReport rep;
    rep.Q = Q;
    rep.T = T;
    rep.q_prime = q_prime;
    rep.q = q;
    rep.t = t;
    if (!(fam.separation() < Q && Q < q_prime && q_prime < q && q <= t && t < T))
        throw std::invalid_argument("anchors must satisfy |A B| < Q < q' < q <= t < T");
    rep.d = fam.distance(fam.at(q_prime), fam.at(t));
    if (rep.d.is_infinite()) return rep;  // no finite bound exists
    rep.precondition_ok = true;
    rep.M = rep.d.value() / (q - q_prime);

    std::vector<double> radii;
    std::vector<typename Fam::Set> sets;
    for (int i = 0; i < sample_count; ++i) {
        double r = sample_count == 1 ? q : q + (t - q) * i / (sample_count - 1);
        radii.push_back(r);
        sets.push_back(fam.at(r));
    }
    rep.observed_max_ratio = detail::pairwise_max_ratio(fam, radii, sets);
    rep.pass = rep.observed_max_ratio <= rep.M + tol;
    return rep;
}

struct ContinuityVerdict {
    bool continuous = false;
    std::string text;                         // "continuous" or the failure reason
    std::optional<std::pair<double, double>> offending_pair;
    std::vector<LipschitzReport> interval_audits;
    // A finite probe set can only falsify the criterion, never verify it.
    const char* confidence = "empirical";
};

template <class Fam>
ContinuityVerdict continuity_criterion_check(const Fam& fam, double Q, double T,
                                             const std::vector<double>& probe_radii) {
    if (!(fam.separation() < Q && Q < T)) throw std::invalid_argument("invalid interval");
    for (double r : probe_radii)
        if (!(Q < r && r < T)) throw std::invalid_argument("probe radius outside (Q, T)");
    ContinuityVerdict v;
    std::vector<typename Fam::Set> sets;
    for (double r : probe_radii) sets.push_back(fam.at(r));
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j)
            if (fam.distance(sets[i], sets[j]).is_infinite()) {
                v.continuous = false;
                v.text = "discontinuous — infinite distance";
                v.offending_pair = {probe_radii[i], probe_radii[j]};
                return v;
            }
    bool all_pass = true;
    for (size_t i = 0; i + 1 < probe_radii.size(); ++i) {
        double q = probe_radii[i], t = probe_radii[i + 1];
        double qp = (Q + q) / 2.0;  // default anchor: midpoint of (Q, q)
        auto rep = lipschitz_audit(fam, Q, T, qp, q, t, 16);
        all_pass = all_pass && rep.pass;
        v.interval_audits.push_back(std::move(rep));
    }
    v.continuous = all_pass;
    v.text = all_pass ? "continuous" : "lipschitz audit failed";
    return v;
}

}  // namespace fr
