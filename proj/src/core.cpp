#include "fairclust/core.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace fairclust {

std::vector<std::vector<PointId>> Clustering::groups() const {
    std::vector<std::vector<PointId>> out(cluster_count);
    for (PointId v = 0; v < assign.size(); ++v) out[assign[v]].push_back(v);
    return out;
}

namespace {

Clustering densify(std::vector<std::uint64_t>&& labels) {
    Clustering c;
    c.assign.resize(labels.size());
    std::unordered_map<std::uint64_t, ClusterId> index;
    index.reserve(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) {
        auto [it, inserted] = index.try_emplace(labels[v], c.cluster_count);
        if (inserted) ++c.cluster_count;
        c.assign[v] = it->second;
    }
    return c;
}

}  // namespace

Clustering normalize(const std::vector<std::pair<PointId, std::uint64_t>>& labeled) {
    const std::size_t n = labeled.size();
    if (n > kMaxPoints) throw std::invalid_argument("normalize: too many points");
    std::vector<std::uint64_t> labels(n);
    std::vector<bool> seen(n, false);
    for (const auto& [v, label] : labeled) {
        if (v >= n)
            throw std::invalid_argument("normalize: point ids not dense 0..n-1 (missing id, found " +
                                        std::to_string(v) + " among " + std::to_string(n) + " points)");
        if (seen[v]) throw std::invalid_argument("normalize: duplicate point id " + std::to_string(v));
        seen[v] = true;
        labels[v] = label;
    }
    return densify(std::move(labels));
}

Clustering normalize(const std::vector<std::uint64_t>& labels) {
    if (labels.size() > kMaxPoints) throw std::invalid_argument("normalize: too many points");
    return densify(std::vector<std::uint64_t>(labels));
}

void validate(const Clustering& c) {
    if (c.assign.size() > kMaxPoints) throw std::invalid_argument("clustering: too many points");
    std::vector<bool> used(c.cluster_count, false);
    for (ClusterId a : c.assign) {
        if (a >= c.cluster_count) throw std::invalid_argument("clustering: cluster index out of range");
        used[a] = true;
    }
    for (ClusterId i = 0; i < c.cluster_count; ++i)
        if (!used[i]) throw std::invalid_argument("clustering: empty cluster " + std::to_string(i));
}

PairDistance pair_distance(const Clustering& a, const Clustering& b) {
    if (a.assign.size() != b.assign.size())
        throw std::invalid_argument("pair_distance: clusterings over different point sets");
    const std::size_t n = a.assign.size();

    std::vector<std::uint64_t> size_a(a.cluster_count, 0), size_b(b.cluster_count, 0);
    std::unordered_map<std::uint64_t, std::uint64_t> inter;
    inter.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        ++size_a[a.assign[v]];
        ++size_b[b.assign[v]];
        ++inter[(std::uint64_t(a.assign[v]) << 32) | b.assign[v]];
    }

    std::uint64_t same_a = 0, same_b = 0, same_both = 0;
    for (std::uint64_t s : size_a) same_a += pairs_of(s);
    for (std::uint64_t s : size_b) same_b += pairs_of(s);
    for (const auto& [key, s] : inter) same_both += pairs_of(s);
    return same_a + same_b - 2 * same_both;
}

}  // namespace fairclust
