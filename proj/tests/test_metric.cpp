#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fr/metric.hpp"

using namespace fr;

namespace {

std::shared_ptr<const FiniteMetricSpace> random_space(std::mt19937& rng, int n) {
    // Random shortest-path metric: rational edge weights closed under
    // Floyd-Warshall, which guarantees the triangle inequality.
    std::uniform_int_distribution<int> w(1, 64);
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d[i][j] = d[j][i] = w(rng) / 8.0;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
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

// Infimum-form Hausdorff: smallest candidate radius r with A inside the
// union of r-balls around B and vice versa. Independent of the max-min
// formula used by the implementation.
double hausdorff_bruteforce(const SubsetMask& a, const SubsetMask& b) {
    const auto& sp = *a.space;
    std::vector<double> candidates{0.0};
    for (size_t i = 0; i < sp.size(); ++i)
        for (size_t j = 0; j < sp.size(); ++j) candidates.push_back(sp.dist(i, j));
    std::sort(candidates.begin(), candidates.end());
    for (double r : candidates) {
        bool covered = true;
        for (size_t i = 0; i < sp.size() && covered; ++i) {
            if (a.contains(i)) {
                bool hit = false;
                for (size_t j = 0; j < sp.size(); ++j)
                    if (b.contains(j) && sp.dist(i, j) <= r) hit = true;
                covered = covered && hit;
            }
            if (b.contains(i)) {
                bool hit = false;
                for (size_t j = 0; j < sp.size(); ++j)
                    if (a.contains(j) && sp.dist(i, j) <= r) hit = true;
                covered = covered && hit;
            }
        }
        if (covered) return r;
    }
    return candidates.back();
}

}  // namespace

TEST_CASE("metric axioms are enforced") {
    CHECK_THROWS(FiniteMetricSpace({"a", "b"}, {{0, 1}}));              // not square
    CHECK_THROWS(FiniteMetricSpace({"a", "b"}, {{0, 1}, {2, 0}}));      // not symmetric
    CHECK_THROWS(FiniteMetricSpace({"a", "b"}, {{0, 0}, {0, 0}}));      // zero off-diagonal
    CHECK_THROWS(FiniteMetricSpace({"a", "b"}, {{1, 1}, {1, 0}}));      // nonzero diagonal
    CHECK_THROWS(FiniteMetricSpace({"a", "b", "c"},
                                   {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}));  // triangle fails
    CHECK_NOTHROW(FiniteMetricSpace({"a", "b", "c"}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));
}

TEST_CASE("balls on the line space") {
    auto sp = FiniteMetricSpace::line({0.0, 1.0, 2.0, 5.0});
    SubsetMask a = SubsetMask::of(sp, {0});
    CHECK(closed_ball(a, 0.0) == a);
    CHECK(closed_ball(a, 1.0) == SubsetMask::of(sp, {0, 1}));
    CHECK(closed_ball(a, 2.0) == SubsetMask::of(sp, {0, 1, 2}));
    CHECK(open_ball(a, 2.0) == SubsetMask::of(sp, {0, 1}));
    CHECK(open_ball(a, 2.0 + 1e-12) == SubsetMask::of(sp, {0, 1, 2}));
    CHECK_THROWS(closed_ball(a, -1.0));
    CHECK_THROWS(open_ball(a, 0.0));
}

TEST_CASE("dist_point_set and empty sets") {
    auto sp = FiniteMetricSpace::line({0.0, 3.0});
    SubsetMask none = SubsetMask::empty(sp);
    CHECK(dist_point_set(0, none).is_infinite());
    SubsetMask a = SubsetMask::of(sp, {1});
    CHECK(dist_point_set(0, a).value() == 3.0);
    CHECK(closed_ball(none, 5.0).is_empty());
}

TEST_CASE("f_r domain") {
    auto sp = FiniteMetricSpace::line({0.0, 2.0, 3.0});
    SubsetMask a = SubsetMask::of(sp, {0});
    SubsetMask b = SubsetMask::of(sp, {1, 2});
    CHECK(set_separation(a, b) == 2.0);
    CHECK_THROWS_AS(f_r(a, b, 2.0), std::domain_error);   // r = |A B| is out of domain
    CHECK_THROWS_AS(f_r(a, b, 1.0), std::domain_error);
    CHECK(f_r(a, b, 2.5) == SubsetMask::of(sp, {1}));
    CHECK(f_r(a, b, 3.0) == b);
}

TEST_CASE("hausdorff basics") {
    auto sp = FiniteMetricSpace::line({0.0, 1.0, 4.0});
    SubsetMask all = SubsetMask::full(sp);
    SubsetMask a = SubsetMask::of(sp, {0});
    CHECK(hausdorff(a, a).value() == 0.0);
    CHECK(hausdorff(a, all).value() == 4.0);
    CHECK(hausdorff(all, a).value() == 4.0);
    CHECK_THROWS(hausdorff(a, SubsetMask::empty(sp)));
}

TEST_CASE("hausdorff matches the infimum-form brute force on random spaces") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 60; ++trial) {
        auto sp = random_space(rng, 3 + (int)(rng() % 10));
        SubsetMask a = random_mask(rng, sp);
        SubsetMask b = random_mask(rng, sp);
        CHECK(hausdorff(a, b).value() == hausdorff_bruteforce(a, b));
    }
}

TEST_CASE("hausdorff triangle inequality") {
    std::mt19937 rng(17);
    // Exhaustive over all subset triples for tiny spaces, randomized above.
    for (int trial = 0; trial < 3; ++trial) {
        auto sp = random_space(rng, 4);
        int full = (1 << sp->size()) - 1;
        auto mask_of_bits = [&](int bits) {
            std::vector<char> m(sp->size(), 0);
            for (size_t i = 0; i < sp->size(); ++i) m[i] = (bits >> i) & 1;
            return SubsetMask(sp, std::move(m));
        };
        for (int x = 1; x <= full; ++x)
            for (int y = 1; y <= full; ++y)
                for (int z = 1; z <= full; ++z) {
                    auto mx = mask_of_bits(x), my = mask_of_bits(y), mz = mask_of_bits(z);
                    CHECK(hausdorff(mx, mz).value() <=
                          hausdorff(mx, my).value() + hausdorff(my, mz).value() + 1e-12);
                }
    }
    for (int trial = 0; trial < 200; ++trial) {
        auto sp = random_space(rng, 3 + (int)(rng() % 10));
        auto x = random_mask(rng, sp), y = random_mask(rng, sp), z = random_mask(rng, sp);
        CHECK(hausdorff(x, z).value() <=
              hausdorff(x, y).value() + hausdorff(y, z).value() + 1e-12);
    }
}

TEST_CASE("decreasing chains converge to their intersection") {
    auto sp = FiniteMetricSpace::line({0.0, 1.0, 2.0, 3.0, 4.0});
    std::vector<SubsetMask> chain{SubsetMask::full(sp), SubsetMask::of(sp, {0, 1, 2}),
                                  SubsetMask::of(sp, {0, 1}), SubsetMask::of(sp, {0})};
    auto [limit, dists] = decreasing_chain_limit(chain);
    CHECK(limit == SubsetMask::of(sp, {0}));
    REQUIRE(dists.size() == 4);
    CHECK(dists[0].value() == 4.0);
    CHECK(dists[1].value() == 2.0);
    CHECK(dists[2].value() == 1.0);
    CHECK(dists[3].value() == 0.0);
    for (size_t i = 1; i < dists.size(); ++i) CHECK(dists[i].value() <= dists[i - 1].value());

    CHECK_THROWS(decreasing_chain_limit({SubsetMask::of(sp, {0}), SubsetMask::of(sp, {1})}));
}

TEST_CASE("f_r against direct definition on random spaces") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        auto sp = random_space(rng, 3 + (int)(rng() % 10));
        SubsetMask a = random_mask(rng, sp);
        SubsetMask b = random_mask(rng, sp);
        double sep = set_separation(a, b);
        double r = sep + 0.125 * (1 + (int)(rng() % 16));
        SubsetMask got = f_r(a, b, r);
        for (size_t p = 0; p < sp->size(); ++p) {
            bool expect = false;
            if (b.contains(p))
                for (size_t q = 0; q < sp->size(); ++q)
                    if (a.contains(q) && sp->dist(p, q) <= r) expect = true;
            CHECK(got.contains(p) == expect);
        }
    }
}
