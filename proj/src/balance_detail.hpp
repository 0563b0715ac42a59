#pragma once
// Shared internals of the balancing algorithms: linear-time re-bucketing of
// points by (cluster, color, id) and dense cluster renumbering.

#include <cstdint>
#include <vector>

#include "fairclust/core.hpp"
#include "fairclust/fairness.hpp"

namespace fairclust::detail {

struct ClusterBuckets {
    std::vector<PointId> pts;        // ordered by (cluster, color, id)
    std::vector<std::uint32_t> off;  // cluster -> first index into pts, size C+1
};

// Two stable counting sorts (by color, then by cluster); scanning points in
// ascending id keeps every (cluster, color) bucket id-ascending.
inline ClusterBuckets bucket_points(const std::vector<ClusterId>& assign, ClusterId cluster_count,
                                    const ColorAssignment& colors) {
    const std::uint32_t n = static_cast<std::uint32_t>(assign.size());
    std::vector<PointId> by_color(n);
    {
        std::vector<std::uint32_t> cnt(colors.color_count + 1, 0);
        for (PointId v = 0; v < n; ++v) ++cnt[colors.color[v] + 1];
        for (ColorId c = 0; c < colors.color_count; ++c) cnt[c + 1] += cnt[c];
        for (PointId v = 0; v < n; ++v) by_color[cnt[colors.color[v]]++] = v;
    }
    ClusterBuckets b;
    b.pts.resize(n);
    b.off.assign(cluster_count + 1, 0);
    for (PointId v = 0; v < n; ++v) ++b.off[assign[v] + 1];
    for (ClusterId a = 0; a < cluster_count; ++a) b.off[a + 1] += b.off[a];
    std::vector<std::uint32_t> cursor(b.off.begin(), b.off.end() - 1);
    for (PointId v : by_color) b.pts[cursor[assign[v]]++] = v;
    return b;
}

// Renumbers cluster ids densely in ascending old-id order, dropping empties.
inline void compact_clusters(std::vector<ClusterId>& assign, ClusterId& cluster_count) {
    std::vector<std::uint32_t> size(cluster_count, 0);
    for (ClusterId a : assign) ++size[a];
    std::vector<ClusterId> remap(cluster_count);
    ClusterId next = 0;
    for (ClusterId a = 0; a < cluster_count; ++a)
        if (size[a] > 0) remap[a] = next++;
    for (ClusterId& a : assign) a = remap[a];
    cluster_count = next;
}

// Per-cluster color subranges: fills `color_off` (size k+1) with offsets
// relative to the cluster's bucket range [lo, hi).
inline void color_offsets(const ClusterBuckets& b, const ColorAssignment& colors, std::uint32_t lo, std::uint32_t hi,
                          std::vector<std::uint32_t>& color_off) {
    color_off.assign(colors.color_count + 1, 0);
    for (std::uint32_t i = lo; i < hi; ++i) ++color_off[colors.color[b.pts[i]] + 1];
    for (ColorId c = 0; c < colors.color_count; ++c) color_off[c + 1] += color_off[c];
}

}  // namespace fairclust::detail
