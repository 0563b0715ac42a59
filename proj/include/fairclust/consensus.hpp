#pragma once
// Fair consensus clustering: the ell-norm objective over m input
// clusterings, best-input selection, and the fairify composition.

#include <cstdint>
#include <vector>

#include "fairclust/core.hpp"
#include "fairclust/fairness.hpp"

namespace fairclust {

/// Objective exponent; kCenterNorm selects the max-distance (center)
/// objective, any other value is the ell-norm (median is ell = 1).
inline constexpr std::uint32_t kCenterNorm = 0;

struct ConsensusInstance {
    std::vector<Clustering> inputs;  // all over one point set
    std::uint32_t norm_ell = 1;      // kCenterNorm for the center objective
};

/// Checks that the instance is non-empty and all inputs share one point
/// set; throws std::invalid_argument otherwise.
void validate(const ConsensusInstance& inst);

/// Sum of dist(C_i, c)^ell in exact integer arithmetic (max dist for the
/// center norm). Throws std::overflow_error if a power exceeds 128 bits.
unsigned __int128 consensus_power_sum(const ConsensusInstance& inst, const Clustering& c);

/// (sum_i dist(C_i, c)^ell)^(1/ell); the center norm returns max_i dist.
/// Candidates should be compared via consensus_power_sum, which is exact.
double consensus_objective(const ConsensusInstance& inst, const Clustering& c);

/// Picks the input minimizing the objective (ties by lowest index) and
/// fairifies it with fair_equi (equal color classes) or fair_general.
/// The result is always fair.
Clustering fair_consensus(const ConsensusInstance& inst, const ColorAssignment& colors);

/// Index of the objective-minimizing input, ties by lowest index.
std::size_t best_input_index(const ConsensusInstance& inst);

}  // namespace fairclust
