#pragma once
// Closest fair clustering for equal-size color groups.
//
// The power-of-two algorithm balances colors hierarchically: at iteration i
// the color set is split into blocks of 2^i consecutive colors, every
// cluster's surplus between the two halves of each block is cut out, and the
// cut sets are greedily re-merged into new, locally fair clusters. After the
// last iteration every cluster holds all colors equally.
//
// For general color counts, colors are first grouped by the binary
// representation of k (one power-of-two group per set bit), each group is
// balanced independently, and a final hierarchical pass over the groups
// (treated as weighted meta-colors) establishes the global 1:1:...:1 ratio.

#include <cstdint>
#include <vector>

#include "fairclust/core.hpp"
#include "fairclust/fairness.hpp"

namespace fairclust {

/// Clustering state after each balancing iteration; stages[0] is the input.
struct IterationTrace {
    std::vector<Clustering> stages;
};

/// Hierarchical color blocks. levels[0] holds singleton blocks; level i+1
/// merges adjacent level-i blocks pairwise, carrying an odd last block
/// forward unchanged. Blocks are contiguous, ascending color ranges.
struct BlockSchedule {
    std::vector<std::vector<std::vector<ColorId>>> levels;

    std::size_t iterations() const { return levels.size() - 1; }
};

BlockSchedule block_schedule(std::uint32_t k);

/// Surplus of a cluster between two adjacent equal-size color blocks: the
/// excess of the larger side over the smaller, with every color of that side
/// equally represented, lowest point ids per color. Empty when balanced.
/// Requires each block's colors to be equally represented in the cluster
/// (the iteration invariant); throws std::logic_error otherwise.
std::vector<PointId> surplus_equi(const std::vector<PointId>& cluster, const std::vector<ColorId>& block_a,
                                  const std::vector<ColorId>& block_b, const ColorAssignment& colors);

/// Greedily pairs surplus sets from two adjacent blocks into locally fair
/// sets: each output set carries equal counts of every color of both blocks.
/// Consumes both sides fully; sets are paired in input order, the larger of
/// a pair trimmed to the smaller by lowest ids per color.
/// Throws std::invalid_argument when the side totals differ.
std::vector<std::vector<PointId>> multi_gm(const std::vector<std::vector<PointId>>& side_j,
                                           const std::vector<std::vector<PointId>>& side_j1,
                                           const ColorAssignment& colors);

/// Closest-fair balancing for k a power of two and equal color classes.
/// Output is fair; pair_distance(d, output) <= (3^log2(k) - 1) * optimum.
Clustering fair_power_of_two(const Clustering& d, const ColorAssignment& colors, IterationTrace* trace = nullptr);

/// Disjoint color groups covering 0..k-1, one group of size 2^b per set bit
/// of k, colors assigned ascending, groups ordered by descending size.
std::vector<std::vector<ColorId>> binary_color_groups(std::uint32_t k);

/// Closest fair clustering for equal color classes and arbitrary k: balances
/// each binary color group, then aligns the groups as weighted meta-colors.
Clustering fair_equi(const Clustering& d, const ColorAssignment& colors);

}  // namespace fairclust
