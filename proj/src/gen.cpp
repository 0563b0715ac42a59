#include "fairclust/gen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace fairclust {

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

}  // namespace

GeneratedInstance gen_random(const RandomSpec& spec) {
    if (spec.k == 0) throw std::invalid_argument("gen_random: k must be positive");
    std::vector<std::uint64_t> profile = spec.profile;
    if (profile.empty()) profile.assign(spec.k, 1);
    if (profile.size() != spec.k) throw std::invalid_argument("gen_random: profile length differs from k");
    std::uint64_t weight = 0;
    for (std::uint64_t p : profile) {
        if (p == 0) throw std::invalid_argument("gen_random: profile entries must be positive");
        weight += p;
    }
    if (spec.n == 0 || spec.n % weight != 0)
        throw std::invalid_argument("gen_random: n must be a positive multiple of the profile weight " +
                                    std::to_string(weight));
    const std::uint64_t scale = spec.n / weight;

    std::mt19937_64 rng(spec.seed);
    GeneratedInstance out;
    out.colors.color_count = spec.k;
    out.colors.color.reserve(spec.n);
    for (ColorId c = 0; c < spec.k; ++c)
        out.colors.color.insert(out.colors.color.end(), profile[c] * scale, c);
    for (std::size_t i = spec.n; i > 1; --i) std::swap(out.colors.color[i - 1], out.colors.color[bounded(rng, i)]);

    std::vector<std::uint64_t> labels(spec.n);
    if (spec.law == ClusterLaw::Uniform) {
        const std::uint64_t m = 1 + bounded(rng, spec.n);
        for (auto& l : labels) l = bounded(rng, m);
    } else {
        // Runs of geometric length with mean ~ sqrt(n).
        const std::uint64_t mean = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(std::sqrt(double(spec.n))));
        std::uint64_t cluster = 0;
        std::size_t v = 0;
        while (v < spec.n) {
            labels[v++] = cluster;
            if (bounded(rng, mean) == 0) ++cluster;
        }
    }
    out.clustering = normalize(labels);
    return out;
}

namespace {

// First partition of {0..d-1} into triples with sums == target, in
// lexicographic order of the chosen triples; nullopt when none exists.
std::optional<std::vector<std::array<std::size_t, 3>>> find_triples(const std::vector<std::uint64_t>& s,
                                                                    std::uint64_t target) {
    const std::size_t d = s.size();
    std::vector<bool> used(d, false);
    std::vector<std::array<std::size_t, 3>> chosen;
    const std::function<bool()> go = [&]() {
        std::size_t first = d;
        for (std::size_t i = 0; i < d; ++i)
            if (!used[i]) {
                first = i;
                break;
            }
        if (first == d) return true;
        used[first] = true;
        for (std::size_t j = first + 1; j < d; ++j) {
            if (used[j] || s[first] + s[j] > target) continue;
            used[j] = true;
            for (std::size_t l = j + 1; l < d; ++l) {
                if (used[l] || s[first] + s[j] + s[l] != target) continue;
                used[l] = true;
                chosen.push_back({first, j, l});
                if (go()) return true;
                chosen.pop_back();
                used[l] = false;
            }
            used[j] = false;
        }
        used[first] = false;
        return false;
    };
    if (go()) return chosen;
    return std::nullopt;
}

}  // namespace

HardnessInstance gen_hardness(const std::vector<std::uint64_t>& s, std::uint32_t k,
                              const std::optional<std::vector<std::array<std::size_t, 3>>>& partition) {
    const std::size_t d = s.size();
    if (d == 0 || d % 3 != 0) throw std::invalid_argument("gen_hardness: |S| must be a positive multiple of 3");
    if (k < 3) throw std::invalid_argument("gen_hardness: k must be at least 3");
    const std::size_t f = d / 3;
    const std::uint64_t total = std::accumulate(s.begin(), s.end(), std::uint64_t(0));
    if (total % f != 0) throw std::invalid_argument("gen_hardness: sum of S must be divisible by |S|/3");
    const std::uint64_t t = total / f;

    HardnessInstance out;
    out.t = t;
    for (std::size_t i = 0; i < d; ++i)
        if (!(4 * s[i] > t && 2 * s[i] < t)) out.out_of_range.push_back(i);

    // Points: f blocks of (k-1)*T points colored 1..k-1 (T per color), then
    // one monochromatic color-0 cluster of x_j points per element of S.
    const std::uint64_t n64 = std::uint64_t(f) * k * t;
    if (n64 > kMaxPoints) throw std::invalid_argument("gen_hardness: instance too large");
    const std::size_t gb_points = f * (k - 1) * t;
    out.colors.color_count = k;
    out.colors.color.reserve(n64);
    out.h.assign.reserve(n64);
    for (std::size_t i = 0; i < f; ++i)
        for (ColorId c = 1; c < k; ++c)
            for (std::uint64_t q = 0; q < t; ++q) {
                out.colors.color.push_back(c);
                out.h.assign.push_back(static_cast<ClusterId>(i));
            }
    for (std::size_t j = 0; j < d; ++j)
        for (std::uint64_t q = 0; q < s[j]; ++q) {
            out.colors.color.push_back(0);
            out.h.assign.push_back(static_cast<ClusterId>(f + j));
        }
    out.h.cluster_count = static_cast<ClusterId>(f + d);

    std::uint64_t sum_sq = 0, sum_x_tmx = 0;
    for (std::uint64_t x : s) {
        sum_sq += x * x;
        sum_x_tmx += x * (t - x);
    }
    out.tau = k == 3 ? 2 * sum_sq + 2 * sum_x_tmx : std::uint64_t(f) * (k - 1) * t * t + sum_x_tmx / 2;

    // YES-certificate when a valid triple partition is supplied or found.
    std::optional<std::vector<std::array<std::size_t, 3>>> triples = partition;
    if (triples) {
        std::vector<bool> used(d, false);
        for (const auto& tri : *triples) {
            std::uint64_t sum = 0;
            for (std::size_t idx : tri) {
                if (idx >= d || used[idx]) throw std::invalid_argument("gen_hardness: invalid partition indices");
                used[idx] = true;
                sum += s[idx];
            }
            if (sum != t) throw std::invalid_argument("gen_hardness: partition triple does not sum to T");
        }
        if (std::count(used.begin(), used.end(), true) != static_cast<std::ptrdiff_t>(d))
            throw std::invalid_argument("gen_hardness: partition does not cover S");
    } else if (d <= 15) {
        triples = find_triples(s, t);
    }
    if (!triples) return out;

    // Start of R_j's points; GB_i's color-c points start at
    // i*(k-1)*T + (c-1)*T.
    std::vector<std::size_t> r_start(d);
    {
        std::size_t cursor = gb_points;
        for (std::size_t j = 0; j < d; ++j) {
            r_start[j] = cursor;
            cursor += s[j];
        }
    }

    Clustering cert;
    cert.assign.assign(out.h.assign.size(), 0);
    ClusterId next = 0;
    for (std::size_t i = 0; i < triples->size(); ++i) {
        const auto& tri = (*triples)[i];
        if (k == 3) {
            // Split GB_i per triple element: x points of each of the two
            // colors pair with the matching red cluster.
            std::size_t off1 = i * (k - 1) * t;           // color-1 run
            std::size_t off2 = i * (k - 1) * t + t;       // color-2 run
            for (std::size_t j = 0; j < 3; ++j) {
                const ClusterId id = next++;
                for (std::uint64_t q = 0; q < s[tri[j]]; ++q) cert.assign[off1++] = id;
                for (std::uint64_t q = 0; q < s[tri[j]]; ++q) cert.assign[off2++] = id;
                for (std::uint64_t q = 0; q < s[tri[j]]; ++q) cert.assign[r_start[tri[j]] + q] = id;
            }
        } else {
            const ClusterId id = next++;
            for (std::uint64_t q = 0; q < std::uint64_t(k - 1) * t; ++q) cert.assign[i * (k - 1) * t + q] = id;
            for (std::size_t j = 0; j < 3; ++j)
                for (std::uint64_t q = 0; q < s[tri[j]]; ++q) cert.assign[r_start[tri[j]] + q] = id;
        }
    }
    cert.cluster_count = next;
    out.certificate = std::move(cert);
    return out;
}

}  // namespace fairclust
