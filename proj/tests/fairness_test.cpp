#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fairclust/fairness.hpp"
#include "test_util.hpp"

using namespace fairclust;
using testutil::bounded;

namespace {

ColorAssignment colors_of(std::vector<ColorId> ids) {
    ColorAssignment c;
    c.color = std::move(ids);
    c.color_count = c.color.empty() ? 0 : *std::max_element(c.color.begin(), c.color.end()) + 1;
    return c;
}

}  // namespace

TEST_CASE("reduced_profile divides out the gcd") {
    std::mt19937_64 rng(1);
    auto p = reduced_profile(testutil::colors_with_counts(rng, {4, 4, 4}));
    CHECK(p.p == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(p.scale == 4);

    p = reduced_profile(testutil::colors_with_counts(rng, {2, 4, 6}));
    CHECK(p.p == std::vector<std::uint64_t>{1, 2, 3});
    CHECK(p.scale == 2);

    p = reduced_profile(testutil::colors_with_counts(rng, {5, 3}));
    CHECK(p.p == std::vector<std::uint64_t>{5, 3});
    CHECK(p.scale == 1);
}

TEST_CASE("reduced_profile rejects an empty color class") {
    ColorAssignment c;
    c.color = {0, 0, 2};  // class 1 empty
    c.color_count = 3;
    CHECK_THROWS_AS(reduced_profile(c), std::invalid_argument);
}

TEST_CASE("is_fair checks the exact per-cluster ratio") {
    const ColorAssignment rrbb = colors_of({0, 0, 1, 1});
    CHECK(is_fair(normalize(std::vector<std::uint64_t>{0, 1, 0, 1}), rrbb));
    CHECK_FALSE(is_fair(normalize(std::vector<std::uint64_t>{0, 0, 1, 1}), rrbb));

    // counts 2:4:6 reduce to 1:2:3; a (1,2,3) cluster plus a (1,2,3) rest.
    const ColorAssignment c123 = colors_of({0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2});
    const Clustering split = normalize(std::vector<std::uint64_t>{0, 1, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1});
    CHECK(is_fair(split, c123));
}

TEST_CASE("is_p_divisible checks per-color multiples") {
    // p = (2,3); histogram (4,3) divisible, (4,2) not.
    const ColorAssignment c = colors_of({0, 0, 0, 0, 1, 1, 1});
    const ColorProfile p{{2, 3}, 1};
    CHECK(is_p_divisible(normalize(std::vector<std::uint64_t>{0, 0, 0, 0, 0, 0, 0}), c, p));
    const Clustering bad = normalize(std::vector<std::uint64_t>{0, 0, 0, 0, 0, 0, 1});
    CHECK_FALSE(is_p_divisible(bad, c, p));

    // p = (1,...,1) accepts everything.
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        const auto colors = testutil::equi_colors(rng, 12, 3);
        const ColorProfile ones{{1, 1, 1}, 4};
        CHECK(is_p_divisible(testutil::random_clustering(rng, 12), colors, ones));
    }
}

TEST_CASE("surplus_pdc sizes: remainder, full p_j, empty") {
    // 7 points of color 0 in the cluster, p = 3 -> surplus of 1.
    ColorAssignment colors = colors_of({0, 0, 0, 0, 0, 0, 0, 1});
    std::vector<PointId> cluster = {0, 1, 2, 3, 4, 5, 6};
    CHECK(surplus_pdc(cluster, 0, 3, colors).size() == 1);

    // 6 points, p = 3 -> the divisible case keeps the paper's size p_j.
    cluster = {0, 1, 2, 3, 4, 5};
    const auto full = surplus_pdc(cluster, 0, 3, colors);
    CHECK(full == std::vector<PointId>{0, 1, 2});  // lowest ids

    // no points of the color -> empty.
    CHECK(surplus_pdc(cluster, 1, 5, colors).empty());
}

TEST_CASE("deficit_size complements the remainder") {
    ColorAssignment colors = colors_of({0, 0, 0, 0, 0, 0, 0, 1, 1});
    std::vector<PointId> seven = {0, 1, 2, 3, 4, 5, 6};
    CHECK(deficit_size(seven, 0, 3, colors) == 2);
    std::vector<PointId> six = {0, 1, 2, 3, 4, 5};
    CHECK(deficit_size(six, 0, 3, colors) == 0);
    std::vector<PointId> two = {7, 8};
    CHECK(deficit_size(two, 1, 5, colors) == 3);
}

TEST_CASE("fairness implies p-divisibility; surplus and deficit agree mod p_j") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        const std::uint32_t k = 1 + static_cast<std::uint32_t>(bounded(rng, 4));
        std::vector<std::uint64_t> counts(k);
        for (auto& c : counts) c = 1 + bounded(rng, 6);
        const ColorAssignment colors = testutil::colors_with_counts(rng, counts);
        const std::uint32_t n = static_cast<std::uint32_t>(colors.size());
        const Clustering c = testutil::random_clustering(rng, n);
        const ColorProfile profile = reduced_profile(colors);
        if (is_fair(c, colors)) CHECK(is_p_divisible(c, colors, profile));

        const auto groups = c.groups();
        for (const auto& cluster : groups) {
            for (ColorId j = 0; j < k; ++j) {
                const std::uint64_t p_j = profile.p[j];
                const auto surplus = surplus_pdc(cluster, j, p_j, colors);
                const std::uint64_t deficit = deficit_size(cluster, j, p_j, colors);
                std::uint64_t cnt = 0;
                for (PointId v : cluster) cnt += colors.color[v] == j;
                if (cnt % p_j != 0) {
                    CHECK((surplus.size() + deficit) % p_j == 0);
                    CHECK(deficit == p_j - surplus.size());
                } else {
                    CHECK(deficit == 0);
                    CHECK(surplus.size() == (cnt == 0 ? 0 : p_j));
                }
            }
        }
    }
}
