#pragma once
// Fair correlation clustering: signed complete-graph instances (only "+"
// edges stored, every absent pair is "-"), the disagreement cost, a
// randomized pivot baseline, and the fairify composition that post-processes
// any baseline clustering into a fair one.

#include <cstdint>
#include <utility>
#include <vector>

#include "fairclust/core.hpp"
#include "fairclust/fairness.hpp"

namespace fairclust {

struct CorrelationInstance {
    std::uint32_t n = 0;
    std::vector<std::pair<PointId, PointId>> plus_edges;  // u < v, unique
};

/// Checks edge invariants (u < v, ids < n, no duplicates); throws
/// std::invalid_argument when violated. Edges are sorted in place.
void validate(CorrelationInstance& inst);

/// Disagreements: "+" edges across clusters plus "-" edges inside clusters.
/// Computed as |E+| + sum C(|C_i|, 2) - 2 * (intra "+"), O(n + |E+|).
std::uint64_t cc_cost(const CorrelationInstance& inst, const Clustering& c);

/// Classic randomized pivot: repeatedly pick a uniform unclustered point and
/// cluster it with its unclustered "+" neighbors. Deterministic given seed;
/// 3-approximate in expectation on complete instances.
Clustering pivot_cc(const CorrelationInstance& inst, std::uint64_t seed);

/// Baseline selector for fairify_cc.
struct CcBaseline {
    enum class Kind { Pivot, ExactOracle, Provided } kind = Kind::Pivot;
    std::uint64_t seed = 0;
    Clustering provided;

    static CcBaseline pivot(std::uint64_t seed) { return {Kind::Pivot, seed, {}}; }
    static CcBaseline exact_oracle() { return {Kind::ExactOracle, 0, {}}; }
    static CcBaseline clustering(Clustering c) { return {Kind::Provided, 0, std::move(c)}; }
};

/// Runs the baseline, then the closest-fair post-processing (fair_equi when
/// all color classes have equal size, fair_general otherwise). The output is
/// always fair; its cost is within (gamma + beta + gamma*beta) of the
/// optimal fair cost, gamma being the fairify ratio and beta the baseline's.
Clustering fairify_cc(const CorrelationInstance& inst, const ColorAssignment& colors, const CcBaseline& baseline);

}  // namespace fairclust
