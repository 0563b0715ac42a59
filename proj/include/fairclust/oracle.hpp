#pragma once
// Exhaustive ground-truth solvers over all set partitions for small n:
// the closest fair / p-divisible clustering, optimal (fair) correlation
// clustering, and optimal fair consensus clustering. Every approximation
// bound in the test suites is checked against these.
//
// Enumeration walks restricted growth strings in lexicographic order, so
// every one of the Bell(n) partitions is visited exactly once and ties are
// broken deterministically by enumeration order.

#include <cstdint>
#include <functional>
#include <vector>

#include "fairclust/consensus.hpp"
#include "fairclust/core.hpp"
#include "fairclust/correlation.hpp"
#include "fairclust/fairness.hpp"

namespace fairclust {

/// Default point-count guard for exhaustive enumeration (Bell(13) ~ 2.7e7).
/// The FAIRCLUST_ORACLE_LIMIT environment variable can raise it to at most
/// 15.
std::uint32_t oracle_limit();

/// Streams all partitions of 0..n-1 as restricted growth strings.
class PartitionIterator {
  public:
    explicit PartitionIterator(std::uint32_t n);

    /// Advances to the next partition; false once exhausted. The first call
    /// yields the all-in-one-cluster partition (all-zero string).
    bool next();

    const std::vector<ClusterId>& rgs() const { return rgs_; }
    Clustering clustering() const;

  private:
    std::uint32_t n_;
    bool started_ = false;
    bool done_ = false;
    std::vector<ClusterId> rgs_;
    std::vector<ClusterId> max_prefix_;  // max of rgs_[0..i-1]
};

/// Enumerates all of the Bell(n) partitions of 0..n-1.
std::vector<Clustering> partitions(std::uint32_t n);

struct OracleResult {
    Clustering best;
    std::uint64_t value = 0;  // pair distance or correlation cost
};

/// Minimum pair-distance partition among those satisfying `admissible`.
/// Throws std::runtime_error when none qualifies.
OracleResult exact_closest_if(const Clustering& d, const std::function<bool(const Clustering&)>& admissible);

/// Closest fair clustering by full enumeration.
OracleResult exact_closest_fair(const Clustering& d, const ColorAssignment& colors);

/// Closest p-divisible clustering by full enumeration.
OracleResult exact_closest_pdc(const Clustering& d, const ColorAssignment& colors, const ColorProfile& profile);

/// Optimal fair correlation clustering by full enumeration.
OracleResult exact_fair_cc(const CorrelationInstance& inst, const ColorAssignment& colors);

/// Optimal unconstrained correlation clustering by full enumeration (the
/// beta = 1 baseline for fairify_cc).
OracleResult exact_min_cc(const CorrelationInstance& inst);

struct ConsensusOracleResult {
    Clustering best;
    unsigned __int128 power_sum = 0;  // sum of dist^ell (center: max dist)
    double objective = 0.0;
};

/// Optimal fair consensus clustering by full enumeration.
ConsensusOracleResult exact_fair_consensus(const ConsensusInstance& inst, const ColorAssignment& colors);

}  // namespace fairclust
