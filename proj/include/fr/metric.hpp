#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fr/hausdorff_value.hpp"

namespace fr {

// Explicit finite metric space: point labels plus a full distance matrix.
// Metric axioms are validated at construction; check() re-asserts them.
class FiniteMetricSpace {
public:
    FiniteMetricSpace(std::vector<std::string> labels,
                      std::vector<std::vector<double>> dist);

    // Points on the real line with the absolute-value metric; labels are
    // the decimal coordinates.
    static std::shared_ptr<const FiniteMetricSpace> line(const std::vector<double>& points);

    size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    double dist(size_t i, size_t j) const { return dist_[i][j]; }

    void check() const;  // throws if the metric axioms fail

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<double>> dist_;
};

// A subset of a FiniteMetricSpace as a membership vector.
struct SubsetMask {
    std::shared_ptr<const FiniteMetricSpace> space;
    std::vector<char> members;

    SubsetMask() = default;
    SubsetMask(std::shared_ptr<const FiniteMetricSpace> s, std::vector<char> m);

    static SubsetMask empty(std::shared_ptr<const FiniteMetricSpace> s);
    static SubsetMask full(std::shared_ptr<const FiniteMetricSpace> s);
    static SubsetMask of(std::shared_ptr<const FiniteMetricSpace> s,
                         std::initializer_list<size_t> idx);

    bool is_empty() const;
    size_t count() const;
    bool contains(size_t i) const { return members[i] != 0; }
    bool subset_of(const SubsetMask& other) const;

    friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
        return a.space == b.space && a.members == b.members;
    }
};

// min over members of A of dist(p, a); Infinite for empty A.
HausdorffValue dist_point_set(size_t p, const SubsetMask& a);

// All p with dist_point_set(p, A) <= r. Empty for empty A; equals A at r = 0.
SubsetMask closed_ball(const SubsetMask& a, double r);

// All p with dist_point_set(p, A) < r; requires r > 0.
SubsetMask open_ball(const SubsetMask& a, double r);

// Symmetric max of directed point-to-set maxima; requires both nonempty and
// in the same space. Always finite here.
HausdorffValue hausdorff(const SubsetMask& a, const SubsetMask& b);

// min over a in A, b in B of dist(a, b); the |A B| separation.
double set_separation(const SubsetMask& a, const SubsetMask& b);

// F_r(A, B) = closed_ball(A, r) intersect B; requires r > |A B|.
SubsetMask f_r(const SubsetMask& a, const SubsetMask& b, double r);

// Intersection of a nested nonempty chain plus the Hausdorff distances from
// each chain element to that intersection.
std::pair<SubsetMask, std::vector<HausdorffValue>>
decreasing_chain_limit(const std::vector<SubsetMask>& chain);

SubsetMask mask_intersect(const SubsetMask& a, const SubsetMask& b);
SubsetMask mask_union(const SubsetMask& a, const SubsetMask& b);

}  // namespace fr
