#include "fairclust/fairness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fairclust {

void validate(const ColorAssignment& colors) {
    std::vector<bool> used(colors.color_count, false);
    for (ColorId c : colors.color) {
        if (c >= colors.color_count) throw std::invalid_argument("colors: color id out of range");
        used[c] = true;
    }
    for (ColorId c = 0; c < colors.color_count; ++c)
        if (!used[c]) throw std::invalid_argument("colors: empty color class " + std::to_string(c));
}

std::vector<std::uint64_t> color_counts(const ColorAssignment& colors) {
    std::vector<std::uint64_t> counts(colors.color_count, 0);
    for (ColorId c : colors.color) ++counts.at(c);
    return counts;
}

ColorHistogram color_histogram(const Clustering& c, const ColorAssignment& colors) {
    if (c.size() != colors.size())
        throw std::invalid_argument("color_histogram: clustering and colors over different point sets");
    ColorHistogram h(c.cluster_count, std::vector<std::uint64_t>(colors.color_count, 0));
    for (PointId v = 0; v < c.size(); ++v) ++h[c.assign[v]].at(colors.color[v]);
    return h;
}

ColorProfile reduced_profile(const ColorAssignment& colors) {
    auto counts = color_counts(colors);
    if (counts.empty()) throw std::invalid_argument("reduced_profile: no colors");
    std::uint64_t g = 0;
    for (std::uint64_t c : counts) {
        if (c == 0) throw std::invalid_argument("reduced_profile: empty color class");
        g = std::gcd(g, c);
    }
    ColorProfile profile;
    profile.scale = g;
    profile.p.reserve(counts.size());
    for (std::uint64_t c : counts) profile.p.push_back(c / g);
    return profile;
}

bool is_fair(const Clustering& c, const ColorAssignment& colors) {
    const ColorProfile profile = reduced_profile(colors);
    const ColorHistogram h = color_histogram(c, colors);
    for (const auto& row : h) {
        if (row[0] % profile.p[0] != 0) return false;
        const std::uint64_t t = row[0] / profile.p[0];
        for (ColorId j = 1; j < colors.color_count; ++j)
            if (row[j] != t * profile.p[j]) return false;
    }
    return true;
}

bool is_p_divisible(const Clustering& c, const ColorAssignment& colors, const ColorProfile& profile) {
    if (profile.p.size() != colors.color_count)
        throw std::invalid_argument("is_p_divisible: profile does not match color count");
    const ColorHistogram h = color_histogram(c, colors);
    for (const auto& row : h)
        for (ColorId j = 0; j < colors.color_count; ++j)
            if (row[j] % profile.p[j] != 0) return false;
    return true;
}

std::vector<PointId> surplus_pdc(const std::vector<PointId>& cluster, ColorId color_j, std::uint64_t p_j,
                                 const ColorAssignment& colors) {
    if (p_j == 0) throw std::invalid_argument("surplus_pdc: p_j must be positive");
    std::vector<PointId> of_color;
    for (PointId v : cluster)
        if (colors.color.at(v) == color_j) of_color.push_back(v);
    if (of_color.empty()) return {};
    std::sort(of_color.begin(), of_color.end());
    const std::uint64_t rem = of_color.size() % p_j;
    const std::uint64_t take = rem == 0 ? p_j : rem;
    of_color.resize(take);
    return of_color;
}

std::uint64_t deficit_size(const std::vector<PointId>& cluster, ColorId color_j, std::uint64_t p_j,
                           const ColorAssignment& colors) {
    if (p_j == 0) throw std::invalid_argument("deficit_size: p_j must be positive");
    std::uint64_t count = 0;
    for (PointId v : cluster)
        if (colors.color.at(v) == color_j) ++count;
    const std::uint64_t rem = count % p_j;
    return rem == 0 ? 0 : p_j - rem;
}

}  // namespace fairclust
