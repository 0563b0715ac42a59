#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "fairclust/equi.hpp"
#include "fairclust/general.hpp"
#include "fairclust/oracle.hpp"
#include "test_util.hpp"

using namespace fairclust;
using testutil::bounded;

TEST_CASE("partition counts match the Bell numbers") {
    const std::uint64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (std::uint32_t n = 0; n <= 10; ++n) CHECK(partitions(n).size() == bell[n]);
}

TEST_CASE("enumeration is duplicate-free and lexicographic") {
    PartitionIterator it(6);
    std::set<std::vector<ClusterId>> seen;
    std::vector<ClusterId> prev;
    while (it.next()) {
        CHECK(seen.insert(it.rgs()).second);
        if (!prev.empty()) CHECK(prev < it.rgs());
        prev = it.rgs();
    }
    CHECK(seen.size() == 203);
}

TEST_CASE("the guard rejects large n") {
    CHECK_THROWS_AS(PartitionIterator(static_cast<std::uint32_t>(oracle_limit() + 1)), std::invalid_argument);
}

TEST_CASE("FAIRCLUST_ORACLE_LIMIT raises the guard, capped at 15") {
    ::setenv("FAIRCLUST_ORACLE_LIMIT", "14", 1);
    CHECK(oracle_limit() == 14);
    CHECK_NOTHROW(PartitionIterator(14));
    ::setenv("FAIRCLUST_ORACLE_LIMIT", "99", 1);
    CHECK(oracle_limit() == 15);
    ::unsetenv("FAIRCLUST_ORACLE_LIMIT");
    CHECK(oracle_limit() == 13);
}

TEST_CASE("exact_closest_fair on the rrbb example") {
    ColorAssignment colors;
    colors.color = {0, 0, 1, 1};
    colors.color_count = 2;
    const Clustering d = normalize(std::vector<std::uint64_t>{0, 0, 0, 1});
    const auto res = exact_closest_fair(d, colors);
    CHECK(res.value == 3);
    CHECK(is_fair(res.best, colors));

    // a fair input is its own optimum
    const Clustering fair_in = normalize(std::vector<std::uint64_t>{0, 1, 0, 1});
    CHECK(exact_closest_fair(fair_in, colors).value == 0);

    // with one color every partition is fair
    ColorAssignment mono;
    mono.color = {0, 0, 0, 0};
    mono.color_count = 1;
    CHECK(exact_closest_fair(d, mono).value == 0);
}

TEST_CASE("exact_closest_pdc basics") {
    ColorAssignment mono;
    mono.color = {0, 0};
    mono.color_count = 1;
    const Clustering two = normalize(std::vector<std::uint64_t>{0, 1});
    CHECK(exact_closest_pdc(two, mono, ColorProfile{{2}, 1}).value == 1);
    CHECK(exact_closest_pdc(two, mono, ColorProfile{{1}, 2}).value == 0);
}

TEST_CASE("exact_fair_cc on aligned plus-cliques") {
    // all "+" and globally fair single cluster -> cost 0.
    ColorAssignment colors;
    colors.color = {0, 1, 0, 1};
    colors.color_count = 2;
    CorrelationInstance all_plus;
    all_plus.n = 4;
    for (PointId u = 0; u < 4; ++u)
        for (PointId v = u + 1; v < 4; ++v) all_plus.plus_edges.emplace_back(u, v);
    CHECK(exact_fair_cc(all_plus, colors).value == 0);

    // plus edges matching a fair pairing -> cost 0.
    CorrelationInstance paired;
    paired.n = 4;
    paired.plus_edges = {{0, 1}, {2, 3}};
    CHECK(exact_fair_cc(paired, colors).value == 0);

    // all "-" with 2 colors: best fair partition uses minimal fair cells.
    CorrelationInstance all_minus;
    all_minus.n = 4;
    const auto res = exact_fair_cc(all_minus, colors);
    CHECK(res.value == 2);  // two mixed pairs keep one "-" pair each
}

TEST_CASE("exact_fair_consensus coincides with exact_closest_fair for m = 1") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        const std::uint32_t n = 4 + 2 * static_cast<std::uint32_t>(bounded(rng, 3));
        const ColorAssignment colors = testutil::equi_colors(rng, n, 2);
        const Clustering d = testutil::random_clustering(rng, n);
        ConsensusInstance inst{{d}, 1};
        const auto via_consensus = exact_fair_consensus(inst, colors);
        const auto via_closest = exact_closest_fair(d, colors);
        CHECK(static_cast<std::uint64_t>(via_consensus.power_sum) == via_closest.value);
    }
}

TEST_CASE("oracle optima lower-bound the algorithmic outputs") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const std::uint32_t n = 4 + 2 * static_cast<std::uint32_t>(bounded(rng, 3));
        const ColorAssignment colors = testutil::equi_colors(rng, n, 2);
        const Clustering d = testutil::random_clustering(rng, n);
        const std::uint64_t opt = exact_closest_fair(d, colors).value;
        CHECK(pair_distance(d, fair_power_of_two(d, colors)) >= opt);
        CHECK(pair_distance(d, fair_general(d, colors)) >= opt);

        // 2-color equi instances: the power-of-two path is within factor 2.
        CHECK(pair_distance(d, fair_power_of_two(d, colors)) <= 2 * opt);
    }
}
