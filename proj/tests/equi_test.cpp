#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fairclust/equi.hpp"
#include "fairclust/general.hpp"
#include "fairclust/oracle.hpp"
#include "test_util.hpp"

using namespace fairclust;
using testutil::bounded;
using testutil::satisfies_equal_block;

namespace {

ColorAssignment colors_of(std::vector<ColorId> ids) {
    ColorAssignment c;
    c.color = std::move(ids);
    c.color_count = *std::max_element(c.color.begin(), c.color.end()) + 1;
    return c;
}

}  // namespace

TEST_CASE("block_schedule doubles blocks, odd last block carried forward") {
    const BlockSchedule s4 = block_schedule(4);
    REQUIRE(s4.iterations() == 2);
    CHECK(s4.levels[1] == std::vector<std::vector<ColorId>>{{0, 1}, {2, 3}});
    CHECK(s4.levels[2] == std::vector<std::vector<ColorId>>{{0, 1, 2, 3}});

    CHECK(block_schedule(1).iterations() == 0);

    const BlockSchedule s2 = block_schedule(2);
    REQUIRE(s2.iterations() == 1);
    CHECK(s2.levels[1] == std::vector<std::vector<ColorId>>{{0, 1}});

    const BlockSchedule s3 = block_schedule(3);
    REQUIRE(s3.iterations() == 2);
    CHECK(s3.levels[1] == std::vector<std::vector<ColorId>>{{0, 1}, {2}});
    CHECK(s3.levels[2] == std::vector<std::vector<ColorId>>{{0, 1, 2}});
}

TEST_CASE("block_schedule levels partition the colors and merge pairwise") {
    std::mt19937_64 rng(47);
    for (int rep = 0; rep < 30; ++rep) {
        const std::uint32_t k = 1 + static_cast<std::uint32_t>(bounded(rng, 16));
        const BlockSchedule s = block_schedule(k);
        REQUIRE(s.levels.front().size() == k);
        CHECK(s.levels.back().size() == 1);
        for (std::size_t lvl = 0; lvl < s.levels.size(); ++lvl) {
            std::vector<ColorId> covered;
            for (const auto& block : s.levels[lvl]) covered.insert(covered.end(), block.begin(), block.end());
            std::sort(covered.begin(), covered.end());
            std::vector<ColorId> all(k);
            for (ColorId c = 0; c < k; ++c) all[c] = c;
            CHECK(covered == all);
            if (lvl == 0) continue;
            // every block is either a pairwise merge or the carried odd tail
            const auto& prev = s.levels[lvl - 1];
            for (std::size_t j = 0; 2 * j + 1 < prev.size(); ++j) {
                std::vector<ColorId> merged = prev[2 * j];
                merged.insert(merged.end(), prev[2 * j + 1].begin(), prev[2 * j + 1].end());
                CHECK(s.levels[lvl][j] == merged);
            }
            if (prev.size() % 2 == 1) CHECK(s.levels[lvl].back() == prev.back());
        }
    }
}

TEST_CASE("surplus_equi returns the balanced excess of the larger side") {
    // blockA = {0,1} with 2+2 points, blockB = {2,3} with 1+1.
    const ColorAssignment colors = colors_of({0, 0, 1, 1, 2, 3});
    const std::vector<PointId> cluster = {0, 1, 2, 3, 4, 5};
    const auto t = surplus_equi(cluster, {0, 1}, {2, 3}, colors);
    REQUIRE(t.size() == 2);
    CHECK(colors.color[t[0]] != colors.color[t[1]]);  // one per color of side A
    CHECK(t == std::vector<PointId>{0, 2});           // lowest ids per color

    CHECK(surplus_equi({0, 2, 4, 5}, {0, 1}, {2, 3}, colors).size() == 0);

    // blockA empty, blockB has 6 points over 2 colors -> all 6 from B.
    const ColorAssignment cb = colors_of({2, 2, 2, 3, 3, 3});
    const auto all_b = surplus_equi({0, 1, 2, 3, 4, 5}, {0, 1}, {2, 3}, cb);
    CHECK(all_b.size() == 6);
}

TEST_CASE("surplus_equi flags a broken block invariant") {
    const ColorAssignment colors = colors_of({0, 0, 1, 2, 3});
    CHECK_THROWS_AS(surplus_equi({0, 1, 2, 3, 4}, {0, 1}, {2, 3}, colors), std::logic_error);
}

TEST_CASE("multi_gm pairs greedily and consumes both sides") {
    // side_j = [A of 4 points], side_j1 = [B of 2, B' of 2]; A splits.
    const ColorAssignment colors = colors_of({0, 0, 1, 1, 2, 3, 2, 3});
    const std::vector<PointId> a = {0, 1, 2, 3}, b = {4, 5}, b2 = {6, 7};
    const auto fair = multi_gm({a}, {b, b2}, colors);
    REQUIRE(fair.size() == 2);
    CHECK(fair[0] == std::vector<PointId>{0, 2, 4, 5});
    CHECK(fair[1] == std::vector<PointId>{1, 3, 6, 7});

    CHECK(multi_gm({}, {}, colors).empty());

    const auto whole = multi_gm({{0, 2}}, {{4, 5}}, colors);
    REQUIRE(whole.size() == 1);
    CHECK(whole[0] == std::vector<PointId>{0, 2, 4, 5});
}

TEST_CASE("multi_gm rejects unbalanced totals") {
    const ColorAssignment colors = colors_of({0, 0, 1, 1, 2, 3});
    CHECK_THROWS_AS(multi_gm({{0, 2}, {1, 3}}, {{4, 5}}, colors), std::invalid_argument);
}

TEST_CASE("fair_power_of_two leaves fair inputs unchanged") {
    std::mt19937_64 rng(5);
    const ColorAssignment colors = testutil::equi_colors(rng, 8, 4);
    std::vector<std::uint64_t> labels(8);
    for (std::size_t v = 0; v < 8; ++v) labels[v] = 0;  // one big fair cluster
    const Clustering d = normalize(labels);
    const Clustering f = fair_power_of_two(d, colors);
    CHECK(pair_distance(d, f) == 0);
    CHECK(is_fair(f, colors));
}

TEST_CASE("fair_power_of_two on rrbb {{r,r,b},{b}} hits the optimum 3") {
    const ColorAssignment colors = colors_of({0, 0, 1, 1});
    const Clustering d = normalize(std::vector<std::uint64_t>{0, 0, 0, 1});
    const Clustering f = fair_power_of_two(d, colors);
    CHECK(is_fair(f, colors));
    CHECK(pair_distance(d, f) == 3);
    CHECK(exact_closest_fair(d, colors).value == 3);
}

TEST_CASE("fair_power_of_two on k = 4 with one cluster per same-color pair") {
    ColorAssignment colors;
    colors.color = {0, 0, 1, 1, 2, 2, 3, 3};
    colors.color_count = 4;
    const Clustering d = normalize(std::vector<std::uint64_t>{0, 0, 1, 1, 2, 2, 3, 3});
    const Clustering f = fair_power_of_two(d, colors);
    CHECK(is_fair(f, colors));
    CHECK(pair_distance(d, f) <= 8 * exact_closest_fair(d, colors).value);  // 3^2 - 1
}

TEST_CASE("fair_power_of_two respects the cumulative (3^i - 1) bound") {
    std::mt19937_64 rng(23);
    for (const std::uint32_t k : {2u, 4u}) {
        for (int rep = 0; rep < 30; ++rep) {
            const std::uint32_t n = k * static_cast<std::uint32_t>(1 + bounded(rng, 8 / k));
            const ColorAssignment colors = testutil::equi_colors(rng, n, k);
            const Clustering d = testutil::random_clustering(rng, n);
            IterationTrace trace;
            const Clustering f = fair_power_of_two(d, colors, &trace);
            CHECK(is_fair(f, colors));
            CHECK(testutil::conserves_points(f, colors, n));

            const std::uint64_t opt = exact_closest_fair(d, colors).value;
            const std::uint64_t factor = k == 2 ? 2 : 8;  // 3^log2(k) - 1
            CHECK(pair_distance(d, f) <= factor * opt);

            // Per-iteration: each stage satisfies its block constraint and
            // is 2-close to the constrained optimum for that stage.
            const BlockSchedule sched = block_schedule(k);
            for (std::size_t i = 1; i < trace.stages.size(); ++i) {
                for (const auto& block : sched.levels[i])
                    CHECK(satisfies_equal_block(trace.stages[i], colors, block));
                const auto constrained = exact_closest_if(trace.stages[i - 1], [&](const Clustering& cand) {
                    for (const auto& block : sched.levels[i])
                        if (!satisfies_equal_block(cand, colors, block)) return false;
                    return true;
                });
                CHECK(pair_distance(trace.stages[i - 1], trace.stages[i]) <= 2 * constrained.value);
            }
        }
    }
}

TEST_CASE("binary_color_groups follows the binary representation") {
    auto sizes = [](std::uint32_t k) {
        std::vector<std::size_t> out;
        for (const auto& g : binary_color_groups(k)) out.push_back(g.size());
        return out;
    };
    CHECK(sizes(5) == std::vector<std::size_t>{4, 1});
    CHECK(sizes(8) == std::vector<std::size_t>{8});
    CHECK(sizes(7) == std::vector<std::size_t>{4, 2, 1});

    const auto groups = binary_color_groups(5);
    CHECK(groups[0] == std::vector<ColorId>{0, 1, 2, 3});
    CHECK(groups[1] == std::vector<ColorId>{4});
}

TEST_CASE("fair_equi equals fair_power_of_two for k = 2") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        const std::uint32_t n = 2 * static_cast<std::uint32_t>(1 + bounded(rng, 5));
        const ColorAssignment colors = testutil::equi_colors(rng, n, 2);
        const Clustering d = testutil::random_clustering(rng, n);
        CHECK(fair_equi(d, colors) == fair_power_of_two(d, colors));
    }
}

TEST_CASE("fair_equi leaves fair inputs unchanged") {
    const ColorAssignment colors = colors_of({0, 1, 2, 0, 1, 2});
    const Clustering d = normalize(std::vector<std::uint64_t>{0, 0, 0, 1, 1, 1});
    const Clustering f = fair_equi(d, colors);
    CHECK(pair_distance(d, f) == 0);
}

TEST_CASE("fair_equi output is fair and within the composed chain bound for k = 3") {
    // Stage 1 is one 2-close step (groups [2,1]), stage 2 one block level of
    // make_pdc_fair: dist <= [A + B(A+1)] * opt with A = 3^1-1, B = 7^1-1.
    const std::uint64_t bound = 2 + 6 * 3;
    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 40; ++rep) {
        const std::uint32_t n = 3 * static_cast<std::uint32_t>(1 + bounded(rng, 3));
        const ColorAssignment colors = testutil::equi_colors(rng, n, 3);
        const Clustering d = testutil::random_clustering(rng, n);
        const Clustering f = fair_equi(d, colors);
        CHECK(is_fair(f, colors));
        CHECK(testutil::conserves_points(f, colors, n));
        CHECK(pair_distance(d, f) <= bound * exact_closest_fair(d, colors).value);
    }
}

TEST_CASE("fair_equi handles k = 5, 6, 7 and stays fair") {
    std::mt19937_64 rng(41);
    for (const std::uint32_t k : {5u, 6u, 7u}) {
        for (int rep = 0; rep < 10; ++rep) {
            const std::uint32_t n = k * static_cast<std::uint32_t>(1 + bounded(rng, 20));
            const ColorAssignment colors = testutil::equi_colors(rng, n, k);
            const Clustering d = testutil::random_clustering(rng, n);
            const Clustering f = fair_equi(d, colors);
            CHECK(is_fair(f, colors));
            CHECK(testutil::conserves_points(f, colors, n));
        }
    }
}

TEST_CASE("fair_power_of_two rejects invalid inputs") {
    std::mt19937_64 rng(43);
    CHECK_THROWS_AS(fair_power_of_two(testutil::random_clustering(rng, 6), testutil::equi_colors(rng, 6, 3)),
                    std::invalid_argument);  // k not a power of two
    const ColorAssignment unequal = colors_of({0, 0, 0, 1});
    CHECK_THROWS_AS(fair_power_of_two(testutil::random_clustering(rng, 4), unequal), std::invalid_argument);
}
