#include "fairclust/equi.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "fairclust/general.hpp"
#include "balance_detail.hpp"

namespace fairclust {

BlockSchedule block_schedule(std::uint32_t k) {
    if (k == 0) throw std::invalid_argument("block_schedule: k must be positive");
    BlockSchedule s;
    std::vector<std::vector<ColorId>> level(k);
    for (ColorId c = 0; c < k; ++c) level[c] = {c};
    s.levels.push_back(level);
    while (level.size() > 1) {
        std::vector<std::vector<ColorId>> next;
        for (std::size_t j = 0; j + 1 < level.size(); j += 2) {
            std::vector<ColorId> merged = level[j];
            merged.insert(merged.end(), level[j + 1].begin(), level[j + 1].end());
            next.push_back(std::move(merged));
        }
        if (level.size() % 2 == 1) next.push_back(level.back());
        level = std::move(next);
        s.levels.push_back(level);
    }
    return s;
}

namespace {

std::uint64_t count_in(const std::vector<PointId>& pts, const std::vector<ColorId>& block,
                       const ColorAssignment& colors, std::vector<std::uint64_t>& per_color) {
    per_color.assign(block.size(), 0);
    std::uint64_t total = 0;
    for (PointId v : pts)
        for (std::size_t i = 0; i < block.size(); ++i)
            if (colors.color.at(v) == block[i]) {
                ++per_color[i];
                ++total;
            }
    return total;
}

void require_uniform(const std::vector<std::uint64_t>& per_color, const char* what) {
    for (std::uint64_t c : per_color)
        if (c != per_color[0]) throw std::logic_error(std::string(what) + ": block colors not equally represented");
}

}  // namespace

std::vector<PointId> surplus_equi(const std::vector<PointId>& cluster, const std::vector<ColorId>& block_a,
                                  const std::vector<ColorId>& block_b, const ColorAssignment& colors) {
    if (block_a.size() != block_b.size()) throw std::invalid_argument("surplus_equi: blocks differ in size");
    std::vector<std::uint64_t> per_a, per_b;
    const std::uint64_t cnt_a = count_in(cluster, block_a, colors, per_a);
    const std::uint64_t cnt_b = count_in(cluster, block_b, colors, per_b);
    require_uniform(per_a, "surplus_equi");
    require_uniform(per_b, "surplus_equi");
    if (cnt_a == cnt_b) return {};

    const std::vector<ColorId>& side = cnt_a > cnt_b ? block_a : block_b;
    const std::uint64_t per = (cnt_a > cnt_b ? cnt_a - cnt_b : cnt_b - cnt_a) / side.size();
    std::vector<PointId> out;
    for (ColorId c : side) {
        std::vector<PointId> of_color;
        for (PointId v : cluster)
            if (colors.color.at(v) == c) of_color.push_back(v);
        std::sort(of_color.begin(), of_color.end());
        out.insert(out.end(), of_color.begin(), of_color.begin() + per);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// A surplus set with `per` ids of each of a block's colors, grouped by color
// in ascending color order, ids ascending within each group.
struct SurplusSet {
    std::vector<PointId> ids;
    std::uint32_t colors_in_block = 0;
    std::uint32_t stride = 0;  // original ids per color group
    std::uint32_t per = 0;     // remaining ids per color group
    std::uint32_t consumed = 0;

    void take(std::uint32_t q, std::vector<PointId>& out) {
        for (std::uint32_t g = 0; g < colors_in_block; ++g) {
            const std::size_t base = std::size_t(g) * stride + consumed;
            out.insert(out.end(), ids.begin() + base, ids.begin() + base + q);
        }
        consumed += q;
        per -= q;
    }
};

// multi-GM over the internal representation: pairs sets from the two sides
// in order, trimming the larger to the smaller, and starts a fresh cluster
// per merged set. Both sides must carry the same total point count.
void greedy_merge(std::vector<SurplusSet>& side_a, std::vector<SurplusSet>& side_b, std::vector<ClusterId>& assign,
                  ClusterId& cluster_count) {
    std::size_t i = 0, j = 0;
    std::vector<PointId> merged;
    while (i < side_a.size() && j < side_b.size()) {
        SurplusSet& a = side_a[i];
        SurplusSet& b = side_b[j];
        const std::uint32_t q = std::min(a.per, b.per);
        merged.clear();
        a.take(q, merged);
        b.take(q, merged);
        const ClusterId fresh = cluster_count++;
        for (PointId v : merged) assign[v] = fresh;
        if (a.per == 0) ++i;
        if (b.per == 0) ++j;
    }
    if (i < side_a.size() || j < side_b.size())
        throw std::logic_error("fair_power_of_two: surplus pool imbalance");
}

// One power-of-two balancing pass over the color range [lo, lo + 2^levels).
// Runs `levels` iterations; after iteration i all colors within every block
// of 2^i consecutive range colors appear equally in every cluster.
void balance_power_range(std::vector<ClusterId>& assign, ClusterId& cluster_count, const ColorAssignment& colors,
                         ColorId lo, std::uint32_t levels, IterationTrace* trace) {
    std::vector<std::uint32_t> color_off;
    for (std::uint32_t it = 1; it <= levels; ++it) {
        const std::uint32_t half = 1u << (it - 1);
        const std::uint32_t pairs = (1u << levels) / (half * 2);
        const detail::ClusterBuckets b = detail::bucket_points(assign, cluster_count, colors);
        std::vector<std::vector<SurplusSet>> side_a(pairs), side_b(pairs);

        const ClusterId clusters_before = cluster_count;
        for (ClusterId a = 0; a < clusters_before; ++a) {
            detail::color_offsets(b, colors, b.off[a], b.off[a + 1], color_off);
            const auto count_of = [&](ColorId c) { return color_off[c + 1] - color_off[c]; };
            for (std::uint32_t p = 0; p < pairs; ++p) {
                const ColorId a_lo = lo + p * 2 * half, b_lo = a_lo + half;
                std::uint64_t cnt_a = 0, cnt_b = 0;
                for (std::uint32_t c = 0; c < half; ++c) {
                    if (count_of(a_lo + c) != count_of(a_lo)) throw std::logic_error("fair_power_of_two: block invariant");
                    if (count_of(b_lo + c) != count_of(b_lo)) throw std::logic_error("fair_power_of_two: block invariant");
                    cnt_a += count_of(a_lo + c);
                    cnt_b += count_of(b_lo + c);
                }
                if (cnt_a == cnt_b) continue;
                const ColorId side_lo = cnt_a > cnt_b ? a_lo : b_lo;
                const std::uint32_t per =
                    static_cast<std::uint32_t>((cnt_a > cnt_b ? cnt_a - cnt_b : cnt_b - cnt_a) / half);
                SurplusSet s;
                s.colors_in_block = half;
                s.stride = per;
                s.per = per;
                s.ids.reserve(std::size_t(per) * half);
                for (std::uint32_t c = 0; c < half; ++c) {
                    const std::uint32_t first = b.off[a] + color_off[side_lo + c];
                    s.ids.insert(s.ids.end(), b.pts.begin() + first, b.pts.begin() + first + per);
                }
                (cnt_a > cnt_b ? side_a : side_b)[p].push_back(std::move(s));
            }
        }
        for (std::uint32_t p = 0; p < pairs; ++p) greedy_merge(side_a[p], side_b[p], assign, cluster_count);
        detail::compact_clusters(assign, cluster_count);
        if (trace) trace->stages.push_back(Clustering{assign, cluster_count});
    }
}

void require_equal_classes(const ColorAssignment& colors) {
    const auto counts = color_counts(colors);
    for (std::uint64_t c : counts)
        if (c != counts[0]) throw std::invalid_argument("color classes must have equal size");
}

}  // namespace

std::vector<std::vector<PointId>> multi_gm(const std::vector<std::vector<PointId>>& side_j,
                                           const std::vector<std::vector<PointId>>& side_j1,
                                           const ColorAssignment& colors) {
    // Convert each raw set to the grouped representation, inferring the
    // side's color block from the first set.
    const auto to_sets = [&](const std::vector<std::vector<PointId>>& raw, const char* side) {
        std::vector<SurplusSet> sets;
        std::vector<ColorId> block;
        for (const auto& pts : raw) {
            if (pts.empty()) continue;
            std::map<ColorId, std::vector<PointId>> by_color;
            for (PointId v : pts) by_color[colors.color.at(v)].push_back(v);
            std::vector<ColorId> seen;
            for (auto& [c, ids] : by_color) seen.push_back(c);
            if (block.empty())
                block = seen;
            else if (block != seen)
                throw std::invalid_argument(std::string("multi_gm: ") + side + " sets span different color blocks");
            SurplusSet s;
            s.colors_in_block = static_cast<std::uint32_t>(block.size());
            s.per = s.stride = static_cast<std::uint32_t>(pts.size() / block.size());
            for (auto& [c, ids] : by_color) {
                if (ids.size() != s.per)
                    throw std::invalid_argument("multi_gm: set colors not equally represented");
                std::sort(ids.begin(), ids.end());
                s.ids.insert(s.ids.end(), ids.begin(), ids.end());
            }
            sets.push_back(std::move(s));
        }
        return sets;
    };

    auto sets_a = to_sets(side_j, "side_j");
    auto sets_b = to_sets(side_j1, "side_j1");
    std::uint64_t total_a = 0, total_b = 0;
    for (const auto& s : sets_a) total_a += std::uint64_t(s.per) * s.colors_in_block;
    for (const auto& s : sets_b) total_b += std::uint64_t(s.per) * s.colors_in_block;
    if (total_a != total_b) throw std::invalid_argument("multi_gm: unbalanced totals");

    std::vector<std::vector<PointId>> out;
    std::size_t i = 0, j = 0;
    while (i < sets_a.size() && j < sets_b.size()) {
        SurplusSet& a = sets_a[i];
        SurplusSet& b = sets_b[j];
        const std::uint32_t q = std::min(a.per, b.per);
        std::vector<PointId> merged;
        a.take(q, merged);
        b.take(q, merged);
        std::sort(merged.begin(), merged.end());
        out.push_back(std::move(merged));
        if (a.per == 0) ++i;
        if (b.per == 0) ++j;
    }
    return out;
}

Clustering fair_power_of_two(const Clustering& d, const ColorAssignment& colors, IterationTrace* trace) {
    validate(d);
    validate(colors);
    if (d.size() != colors.size())
        throw std::invalid_argument("fair_power_of_two: clustering and colors over different point sets");
    const std::uint32_t k = colors.color_count;
    if (k == 0 || (k & (k - 1)) != 0) throw std::invalid_argument("fair_power_of_two: color count not a power of two");
    require_equal_classes(colors);

    Clustering out = d;
    if (trace) trace->stages.push_back(out);
    std::uint32_t levels = 0;
    while ((1u << levels) < k) ++levels;
    balance_power_range(out.assign, out.cluster_count, colors, 0, levels, trace);
    return out;
}

std::vector<std::vector<ColorId>> binary_color_groups(std::uint32_t k) {
    if (k == 0) throw std::invalid_argument("binary_color_groups: k must be positive");
    std::vector<std::vector<ColorId>> groups;
    ColorId next = 0;
    for (int bit = 31; bit >= 0; --bit) {
        if (!(k & (1u << bit))) continue;
        std::vector<ColorId> g(std::size_t(1) << bit);
        for (auto& c : g) c = next++;
        groups.push_back(std::move(g));
    }
    return groups;
}

Clustering fair_equi(const Clustering& d, const ColorAssignment& colors) {
    validate(d);
    validate(colors);
    if (d.size() != colors.size())
        throw std::invalid_argument("fair_equi: clustering and colors over different point sets");
    if (colors.color_count <= 1) return d;
    require_equal_classes(colors);

    const auto groups = binary_color_groups(colors.color_count);

    // Stage 1: balance every binary group in place; a group's pass only
    // moves points of its own colors, so earlier groups stay balanced.
    Clustering mid = d;
    for (const auto& g : groups) {
        std::uint32_t levels = 0;
        while ((std::size_t(1) << levels) < g.size()) ++levels;
        if (levels > 0) balance_power_range(mid.assign, mid.cluster_count, colors, g.front(), levels, nullptr);
    }

    if (groups.size() == 1) return mid;

    // Stage 2: align the groups, each acting as one meta-color of weight
    // |G|; every moved unit carries one point of each color in the group,
    // preserving the intra-group equality from stage 1.
    std::vector<MetaColor> metas;
    for (const auto& g : groups) {
        MetaColor m;
        m.p = g.size();
        for (ColorId c : g) m.parts.emplace_back(c, 1);
        metas.push_back(std::move(m));
    }
    return make_pdc_fair_meta(mid, colors, metas, nullptr);
}

}  // namespace fairclust
