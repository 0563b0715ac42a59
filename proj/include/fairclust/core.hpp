#pragma once
// Canonical partition representation and the exact pair-counting distance
// between two clusterings of the same point set.
//
// A Clustering stores a dense point -> cluster assignment. Points are dense
// ids 0..n-1, cluster indices are dense 0..m-1 and no cluster is empty.
// All functions here are pure: inputs are never modified.

#include <cstdint>
#include <utility>
#include <vector>

namespace fairclust {

using PointId = std::uint32_t;
using ClusterId = std::uint32_t;

/// Number of unordered point pairs co-clustered in exactly one of two
/// partitions (Mirkin / pair-counting distance). Always <= n(n-1)/2.
using PairDistance = std::uint64_t;

struct Clustering {
    std::vector<ClusterId> assign;  // point id -> dense cluster index
    ClusterId cluster_count = 0;

    std::size_t size() const { return assign.size(); }

    /// Derived view: clusters as point-id lists, ids ascending within each.
    std::vector<std::vector<PointId>> groups() const;

    bool operator==(const Clustering&) const = default;
};

/// Largest supported point count; C(n,2) must fit in 64 bits.
inline constexpr std::uint64_t kMaxPoints = std::uint64_t(1) << 32;

/// Unordered pairs among m points.
inline std::uint64_t pairs_of(std::uint64_t m) { return m * (m - 1) / 2; }

/// Build a normalized Clustering from labeled points. Labels are arbitrary;
/// cluster indices are assigned in first-appearance order of the labels,
/// scanning points in ascending id. Point ids must be exactly 0..n-1.
/// Throws std::invalid_argument on duplicate or missing point ids.
Clustering normalize(const std::vector<std::pair<PointId, std::uint64_t>>& labeled);

/// Same, with point id = index into `labels`.
Clustering normalize(const std::vector<std::uint64_t>& labels);

/// Checks the Clustering invariants (dense non-empty clusters); throws
/// std::invalid_argument when violated.
void validate(const Clustering& c);

/// Exact pair-counting distance. Runs in O(n + #nonzero cluster
/// intersections) using a sparse intersection table.
/// Throws std::invalid_argument when a and b have different point sets.
PairDistance pair_distance(const Clustering& a, const Clustering& b);

}  // namespace fairclust
