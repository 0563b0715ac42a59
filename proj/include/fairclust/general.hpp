#pragma once
// Arbitrary-ratio pipeline: make every cluster p-divisible (create_pdc),
// then balance hierarchical color blocks to the exact global ratio
// (make_pdc_fair). fair_general composes the two stages.

#include <cstdint>
#include <utility>
#include <vector>

#include "fairclust/core.hpp"
#include "fairclust/equi.hpp"
#include "fairclust/fairness.hpp"

namespace fairclust {

/// Rewrites the clustering so that every cluster's count of color j is a
/// multiple of profile.p[j]. Per color, clusters with a small remainder
/// (<= p_j/2) are cut and their surplus donated to the deficits of the
/// others; leftover surplus fills fresh clusters of exactly p_j points;
/// remaining deficits are served by repeatedly cutting the cluster with the
/// cheapest cut-minus-merge cost. Distance to the input is at most
/// 7.5 * k * the optimal p-divisible distance.
Clustering create_pdc(const Clustering& d, const ColorAssignment& colors, const ColorProfile& profile);

/// Turns a p-divisible clustering into a fair one in ceil(log2 k) block
/// iterations. Colors are processed in descending p_j (ties by ascending
/// color id). Throws std::invalid_argument when the input is not
/// p-divisible. Distance to the input is at most (7^ceil(log2 k) - 1) times
/// the optimal fair distance.
Clustering make_pdc_fair(const Clustering& i, const ColorAssignment& colors, const ColorProfile& profile,
                         IterationTrace* trace = nullptr);

/// create_pdc followed by make_pdc_fair on the reduced global profile.
Clustering fair_general(const Clustering& d, const ColorAssignment& colors);

/// A weighted color group treated as a single color by make_pdc_fair_meta.
/// Moving one unit of the meta-color moves `mult` points of each part, so a
/// unit always carries p = sum of mults points.
struct MetaColor {
    std::uint64_t p = 0;
    std::vector<std::pair<ColorId, std::uint64_t>> parts;  // (real color, points per unit)
};

/// Core of make_pdc_fair over meta-colors. `metas` must be ordered by
/// descending p and every cluster must hold a whole number of units of each
/// meta-color, split across its parts in proportion to their mults.
/// fair_general uses singleton metas; fair_equi uses one meta per binary
/// color group with unit multiplicity per color.
Clustering make_pdc_fair_meta(const Clustering& in, const ColorAssignment& colors,
                              const std::vector<MetaColor>& metas, IterationTrace* trace = nullptr);

}  // namespace fairclust
