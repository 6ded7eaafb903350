#include "fr/metric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fr {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     std::vector<std::vector<double>> dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
    check();
}

void FiniteMetricSpace::check() const {
    const size_t n = labels_.size();
    if (dist_.size() != n)
        throw std::invalid_argument("distance matrix size does not match label count");
    for (size_t i = 0; i < n; ++i) {
        if (dist_[i].size() != n)
            throw std::invalid_argument("distance matrix must be square");
        if (dist_[i][i] != 0.0)
            throw std::invalid_argument("dist[i][i] must be 0");
        for (size_t j = 0; j < n; ++j) {
            if (!(dist_[i][j] >= 0.0) || !std::isfinite(dist_[i][j]))
                throw std::invalid_argument("distances must be finite and nonnegative");
            if (dist_[i][j] != dist_[j][i])
                throw std::invalid_argument("distance matrix must be symmetric");
            if (i != j && dist_[i][j] <= 0.0)
                throw std::invalid_argument("distinct points must have positive distance");
        }
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (dist_[i][k] > dist_[i][j] + dist_[j][k])
                    throw std::invalid_argument("triangle inequality violated");
}

std::shared_ptr<const FiniteMetricSpace>
FiniteMetricSpace::line(const std::vector<double>& points) {
    const size_t n = points.size();
    std::vector<std::string> labels(n);
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i) {
        std::ostringstream os;
        os << points[i];
        labels[i] = os.str();
        for (size_t j = 0; j < n; ++j) d[i][j] = std::fabs(points[i] - points[j]);
    }
    return std::make_shared<FiniteMetricSpace>(std::move(labels), std::move(d));
}

SubsetMask::SubsetMask(std::shared_ptr<const FiniteMetricSpace> s, std::vector<char> m)
    : space(std::move(s)), members(std::move(m)) {
    if (!space || members.size() != space->size())
        throw std::invalid_argument("mask length must equal the point count");
}

SubsetMask SubsetMask::empty(std::shared_ptr<const FiniteMetricSpace> s) {
    std::vector<char> m(s->size(), 0);
    return SubsetMask(std::move(s), std::move(m));
}

SubsetMask SubsetMask::full(std::shared_ptr<const FiniteMetricSpace> s) {
    std::vector<char> m(s->size(), 1);
    return SubsetMask(std::move(s), std::move(m));
}

SubsetMask SubsetMask::of(std::shared_ptr<const FiniteMetricSpace> s,
                          std::initializer_list<size_t> idx) {
    std::vector<char> m(s->size(), 0);
    for (size_t i : idx) {
        if (i >= m.size()) throw std::invalid_argument("index out of range");
        m[i] = 1;
    }
    return SubsetMask(std::move(s), std::move(m));
}

bool SubsetMask::is_empty() const {
    return std::find(members.begin(), members.end(), char(1)) == members.end();
}

size_t SubsetMask::count() const {
    return static_cast<size_t>(std::count(members.begin(), members.end(), char(1)));
}

bool SubsetMask::subset_of(const SubsetMask& other) const {
    if (space != other.space) throw std::invalid_argument("masks from different spaces");
    for (size_t i = 0; i < members.size(); ++i)
        if (members[i] && !other.members[i]) return false;
    return true;
}

static void require_same_space(const SubsetMask& a, const SubsetMask& b) {
    if (a.space != b.space) throw std::invalid_argument("masks from different spaces");
}

HausdorffValue dist_point_set(size_t p, const SubsetMask& a) {
    if (!a.space || p >= a.space->size()) throw std::invalid_argument("index out of range");
    bool any = false;
    double best = 0.0;
    for (size_t i = 0; i < a.members.size(); ++i) {
        if (!a.members[i]) continue;
        double d = a.space->dist(p, i);
        if (!any || d < best) best = d;
        any = true;
    }
    return any ? HausdorffValue::finite(best) : HausdorffValue::infinite();
}

SubsetMask closed_ball(const SubsetMask& a, double r) {
    if (!(r >= 0.0)) throw std::invalid_argument("radius must be nonnegative");
    SubsetMask out = SubsetMask::empty(a.space);
    for (size_t p = 0; p < a.members.size(); ++p) {
        HausdorffValue d = dist_point_set(p, a);
        if (d.is_finite() && d.value() <= r) out.members[p] = 1;
    }
    return out;
}

SubsetMask open_ball(const SubsetMask& a, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
    SubsetMask out = SubsetMask::empty(a.space);
    for (size_t p = 0; p < a.members.size(); ++p) {
        HausdorffValue d = dist_point_set(p, a);
        if (d.is_finite() && d.value() < r) out.members[p] = 1;
    }
    return out;
}

HausdorffValue hausdorff(const SubsetMask& a, const SubsetMask& b) {
    require_same_space(a, b);
    if (a.is_empty() || b.is_empty())
        throw std::invalid_argument("hausdorff requires nonempty masks");
    double m = 0.0;
    for (size_t i = 0; i < a.members.size(); ++i) {
        if (a.members[i]) m = std::max(m, dist_point_set(i, b).value());
        if (b.members[i]) m = std::max(m, dist_point_set(i, a).value());
    }
    return HausdorffValue::finite(m);
}

double set_separation(const SubsetMask& a, const SubsetMask& b) {
    require_same_space(a, b);
    if (a.is_empty() || b.is_empty())
        throw std::invalid_argument("separation requires nonempty masks");
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < a.members.size(); ++i)
        if (a.members[i])
            for (size_t j = 0; j < b.members.size(); ++j)
                if (b.members[j]) best = std::min(best, a.space->dist(i, j));
    return best;
}

SubsetMask f_r(const SubsetMask& a, const SubsetMask& b, double r) {
    require_same_space(a, b);
    if (a.is_empty() || b.is_empty())
        throw std::invalid_argument("F_r requires nonempty A and B");
    if (!(r > set_separation(a, b)))
        throw std::domain_error("radius below separation");
    return mask_intersect(closed_ball(a, r), b);
}

std::pair<SubsetMask, std::vector<HausdorffValue>>
decreasing_chain_limit(const std::vector<SubsetMask>& chain) {
    if (chain.empty()) throw std::invalid_argument("empty chain");
    for (size_t k = 0; k < chain.size(); ++k) {
        if (chain[k].is_empty()) throw std::invalid_argument("chain elements must be nonempty");
        if (k + 1 < chain.size() && !chain[k + 1].subset_of(chain[k]))
            throw std::invalid_argument("chain is not nested");
    }
    SubsetMask inter = chain.front();
    for (const SubsetMask& m : chain) inter = mask_intersect(inter, m);
    std::vector<HausdorffValue> dists;
    dists.reserve(chain.size());
    for (const SubsetMask& m : chain) dists.push_back(hausdorff(m, inter));
    return {inter, dists};
}

SubsetMask mask_intersect(const SubsetMask& a, const SubsetMask& b) {
    require_same_space(a, b);
    SubsetMask out = a;
    for (size_t i = 0; i < out.members.size(); ++i)
        out.members[i] = static_cast<char>(a.members[i] && b.members[i]);
    return out;
}

SubsetMask mask_union(const SubsetMask& a, const SubsetMask& b) {
    require_same_space(a, b);
    SubsetMask out = a;
    for (size_t i = 0; i < out.members.size(); ++i)
        out.members[i] = static_cast<char>(a.members[i] || b.members[i]);
    return out;
}

}  // namespace fr
