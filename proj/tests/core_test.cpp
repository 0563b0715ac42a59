#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fairclust/core.hpp"
#include "test_util.hpp"

using namespace fairclust;
using testutil::bounded;
using testutil::direct_pair_distance;
using testutil::random_clustering;

namespace {

Clustering from_groups(const std::vector<std::vector<PointId>>& groups, std::size_t n) {
    std::vector<std::pair<PointId, std::uint64_t>> labeled;
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (PointId v : groups[g]) labeled.emplace_back(v, g);
    Clustering c = normalize(labeled);
    REQUIRE(c.size() == n);
    return c;
}

}  // namespace

TEST_CASE("normalize relabels in first-appearance order") {
    const Clustering c = normalize({{0, 'a'}, {1, 'a'}, {2, 'b'}});
    CHECK(c.cluster_count == 2);
    CHECK(c.groups() == std::vector<std::vector<PointId>>{{0, 1}, {2}});

    const Clustering swapped = normalize(std::vector<std::uint64_t>{7, 3, 7});
    CHECK(swapped.groups() == std::vector<std::vector<PointId>>{{0, 2}, {1}});
}

TEST_CASE("normalize of the empty map is the empty clustering") {
    const Clustering c = normalize(std::vector<std::uint64_t>{});
    CHECK(c.size() == 0);
    CHECK(c.cluster_count == 0);
}

TEST_CASE("normalize rejects duplicate and missing point ids") {
    CHECK_THROWS_AS(normalize({{0, 1}, {0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(normalize({{0, 1}, {2, 2}}), std::invalid_argument);
}

TEST_CASE("normalize is idempotent and distance-preserving") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 50; ++rep) {
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(bounded(rng, 32));
        std::vector<std::uint64_t> labels(n);
        for (auto& l : labels) l = bounded(rng, 1000);
        const Clustering once = normalize(labels);
        std::vector<std::uint64_t> as_labels(once.assign.begin(), once.assign.end());
        CHECK(normalize(as_labels) == once);

        // Raw labels and the normalized form co-cluster identically.
        Clustering raw;
        raw.assign.resize(n);
        std::vector<std::uint64_t> uniq = labels;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (std::size_t v = 0; v < n; ++v)
            raw.assign[v] = static_cast<ClusterId>(std::lower_bound(uniq.begin(), uniq.end(), labels[v]) - uniq.begin());
        raw.cluster_count = static_cast<ClusterId>(uniq.size());
        CHECK(pair_distance(raw, once) == 0);
    }
}

TEST_CASE("pair_distance examples") {
    const Clustering c = from_groups({{0, 1}, {2}}, 3);
    CHECK(pair_distance(c, c) == 0);

    // {{1,2},{3}} vs {{1},{2,3}} over points 0..2 -> 2 of the 3 pairs flip.
    const Clustering a = from_groups({{0, 1}, {2}}, 3);
    const Clustering b = from_groups({{0}, {1, 2}}, 3);
    CHECK(pair_distance(a, b) == 2);

    const Clustering singletons = normalize(std::vector<std::uint64_t>{0, 1, 2, 3});
    const Clustering one = normalize(std::vector<std::uint64_t>{0, 0, 0, 0});
    CHECK(pair_distance(singletons, one) == 6);
}

TEST_CASE("pair_distance rejects mismatched point sets") {
    const Clustering a = normalize(std::vector<std::uint64_t>{0, 0});
    const Clustering b = normalize(std::vector<std::uint64_t>{0, 0, 1});
    CHECK_THROWS_AS(pair_distance(a, b), std::invalid_argument);
}

TEST_CASE("pair_distance equals direct enumeration on random pairs") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(bounded(rng, 64));
        const Clustering a = random_clustering(rng, n);
        const Clustering b = random_clustering(rng, n);
        CHECK(pair_distance(a, b) == direct_pair_distance(a, b));
    }
}

TEST_CASE("pair_distance satisfies the metric axioms on random triples") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(bounded(rng, 64));
        const Clustering a = random_clustering(rng, n);
        const Clustering b = random_clustering(rng, n);
        const Clustering c = random_clustering(rng, n);
        CHECK(pair_distance(a, a) == 0);
        CHECK(pair_distance(a, b) == pair_distance(b, a));
        CHECK(pair_distance(a, c) <= pair_distance(a, b) + pair_distance(b, c));
    }
}
