#include "fairclust/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fairclust {

std::uint32_t oracle_limit() {
    if (const char* env = std::getenv("FAIRCLUST_ORACLE_LIMIT")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::uint32_t>(std::min<long>(v, 15));
    }
    return 13;
}

PartitionIterator::PartitionIterator(std::uint32_t n) : n_(n) {
    if (n > oracle_limit())
        throw std::invalid_argument("oracle: n = " + std::to_string(n) + " exceeds the enumeration guard (" +
                                    std::to_string(oracle_limit()) + ")");
    rgs_.assign(n, 0);
    max_prefix_.assign(n, 0);
}

bool PartitionIterator::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        return true;  // the all-zero string
    }
    // Lexicographic successor: bump the rightmost digit that may grow,
    // reset the suffix to zero. Position 0 is fixed at 0.
    for (std::uint32_t i = n_; i-- > 1;) {
        if (rgs_[i] <= max_prefix_[i]) {
            ++rgs_[i];
            const ClusterId m = std::max(max_prefix_[i], rgs_[i]);
            for (std::uint32_t j = i + 1; j < n_; ++j) {
                rgs_[j] = 0;
                max_prefix_[j] = m;
            }
            return true;
        }
        // rgs_[i] == max_prefix_[i] + 1 is the ceiling; carry left.
    }
    done_ = true;
    return false;
}

Clustering PartitionIterator::clustering() const {
    Clustering c;
    c.assign = rgs_;
    c.cluster_count = n_ == 0 ? 0 : *std::max_element(rgs_.begin(), rgs_.end()) + 1;
    return c;
}

std::vector<Clustering> partitions(std::uint32_t n) {
    std::vector<Clustering> out;
    PartitionIterator it(n);
    while (it.next()) out.push_back(it.clustering());
    return out;
}

namespace {

// Pair distance between a fixed clustering and a candidate RGS, O(n^2);
// cheap at oracle scales and allocation-free.
std::uint64_t rgs_distance(const Clustering& d, const std::vector<ClusterId>& rgs) {
    std::uint64_t dist = 0;
    const std::size_t n = rgs.size();
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            dist += (d.assign[u] == d.assign[v]) != (rgs[u] == rgs[v]);
    return dist;
}

// Histogram rows for an RGS; rows[a][j] = points of color j in cluster a.
void rgs_histogram(const std::vector<ClusterId>& rgs, const ColorAssignment& colors,
                   std::vector<std::vector<std::uint64_t>>& rows) {
    for (auto& row : rows) std::fill(row.begin(), row.end(), 0);
    for (std::size_t v = 0; v < rgs.size(); ++v) ++rows[rgs[v]][colors.color[v]];
}

bool rows_fair(const std::vector<std::vector<std::uint64_t>>& rows, std::size_t used, const ColorProfile& profile) {
    for (std::size_t a = 0; a < used; ++a) {
        const auto& row = rows[a];
        if (row[0] % profile.p[0] != 0) return false;
        const std::uint64_t t = row[0] / profile.p[0];
        for (std::size_t j = 1; j < row.size(); ++j)
            if (row[j] != t * profile.p[j]) return false;
    }
    return true;
}

bool rows_divisible(const std::vector<std::vector<std::uint64_t>>& rows, std::size_t used,
                    const ColorProfile& profile) {
    for (std::size_t a = 0; a < used; ++a)
        for (std::size_t j = 0; j < rows[a].size(); ++j)
            if (rows[a][j] % profile.p[j] != 0) return false;
    return true;
}

std::size_t rgs_cluster_count(const std::vector<ClusterId>& rgs) {
    return rgs.empty() ? 0 : std::size_t(*std::max_element(rgs.begin(), rgs.end())) + 1;
}

}  // namespace

OracleResult exact_closest_if(const Clustering& d, const std::function<bool(const Clustering&)>& admissible) {
    const std::uint32_t n = static_cast<std::uint32_t>(d.size());
    PartitionIterator it(n);
    bool found = false;
    OracleResult res;
    while (it.next()) {
        const Clustering cand = it.clustering();
        if (!admissible(cand)) continue;
        const std::uint64_t dist = rgs_distance(d, it.rgs());
        if (!found || dist < res.value) {
            found = true;
            res.best = cand;
            res.value = dist;
        }
    }
    if (!found) throw std::runtime_error("oracle: no admissible partition exists");
    return res;
}

OracleResult exact_closest_fair(const Clustering& d, const ColorAssignment& colors) {
    if (d.size() != colors.size())
        throw std::invalid_argument("exact_closest_fair: clustering and colors over different point sets");
    const ColorProfile profile = reduced_profile(colors);
    const std::uint32_t n = static_cast<std::uint32_t>(d.size());
    PartitionIterator it(n);
    std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(colors.color_count, 0));
    bool found = false;
    OracleResult res;
    while (it.next()) {
        rgs_histogram(it.rgs(), colors, rows);
        if (!rows_fair(rows, rgs_cluster_count(it.rgs()), profile)) continue;
        const std::uint64_t dist = rgs_distance(d, it.rgs());
        if (!found || dist < res.value) {
            found = true;
            res.best = it.clustering();
            res.value = dist;
        }
    }
    if (!found) throw std::runtime_error("exact_closest_fair: no fair partition exists");
    return res;
}

OracleResult exact_closest_pdc(const Clustering& d, const ColorAssignment& colors, const ColorProfile& profile) {
    if (d.size() != colors.size())
        throw std::invalid_argument("exact_closest_pdc: clustering and colors over different point sets");
    const std::uint32_t n = static_cast<std::uint32_t>(d.size());
    PartitionIterator it(n);
    std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(colors.color_count, 0));
    bool found = false;
    OracleResult res;
    while (it.next()) {
        rgs_histogram(it.rgs(), colors, rows);
        if (!rows_divisible(rows, rgs_cluster_count(it.rgs()), profile)) continue;
        const std::uint64_t dist = rgs_distance(d, it.rgs());
        if (!found || dist < res.value) {
            found = true;
            res.best = it.clustering();
            res.value = dist;
        }
    }
    if (!found) throw std::runtime_error("exact_closest_pdc: no p-divisible partition exists");
    return res;
}

namespace {

// Dense "+" adjacency for cost evaluation inside the enumeration loop.
std::uint64_t rgs_cc_cost(const CorrelationInstance& inst, const std::vector<bool>& plus,
                          const std::vector<ClusterId>& rgs) {
    std::uint64_t cost = 0;
    for (std::uint32_t u = 0; u < inst.n; ++u)
        for (std::uint32_t v = u + 1; v < inst.n; ++v) {
            const bool together = rgs[u] == rgs[v];
            const bool edge = plus[std::size_t(u) * inst.n + v];
            cost += together != edge;
        }
    return cost;
}

std::vector<bool> plus_matrix(const CorrelationInstance& inst) {
    std::vector<bool> plus(std::size_t(inst.n) * inst.n, false);
    for (const auto& [u, v] : inst.plus_edges) plus[std::size_t(u) * inst.n + v] = true;
    return plus;
}

}  // namespace

OracleResult exact_fair_cc(const CorrelationInstance& inst, const ColorAssignment& colors) {
    if (colors.size() != inst.n) throw std::invalid_argument("exact_fair_cc: colors do not match instance size");
    const ColorProfile profile = reduced_profile(colors);
    const std::vector<bool> plus = plus_matrix(inst);
    PartitionIterator it(inst.n);
    std::vector<std::vector<std::uint64_t>> rows(inst.n, std::vector<std::uint64_t>(colors.color_count, 0));
    bool found = false;
    OracleResult res;
    while (it.next()) {
        rgs_histogram(it.rgs(), colors, rows);
        if (!rows_fair(rows, rgs_cluster_count(it.rgs()), profile)) continue;
        const std::uint64_t cost = rgs_cc_cost(inst, plus, it.rgs());
        if (!found || cost < res.value) {
            found = true;
            res.best = it.clustering();
            res.value = cost;
        }
    }
    if (!found) throw std::runtime_error("exact_fair_cc: no fair partition exists");
    return res;
}

OracleResult exact_min_cc(const CorrelationInstance& inst) {
    const std::vector<bool> plus = plus_matrix(inst);
    PartitionIterator it(inst.n);
    bool found = false;
    OracleResult res;
    while (it.next()) {
        const std::uint64_t cost = rgs_cc_cost(inst, plus, it.rgs());
        if (!found || cost < res.value) {
            found = true;
            res.best = it.clustering();
            res.value = cost;
        }
    }
    if (!found) throw std::runtime_error("exact_min_cc: empty enumeration");
    return res;
}

ConsensusOracleResult exact_fair_consensus(const ConsensusInstance& inst, const ColorAssignment& colors) {
    validate(inst);
    const std::uint32_t n = static_cast<std::uint32_t>(inst.inputs.front().size());
    if (colors.size() != n) throw std::invalid_argument("exact_fair_consensus: colors do not match the point set");
    const ColorProfile profile = reduced_profile(colors);
    PartitionIterator it(n);
    std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(colors.color_count, 0));
    bool found = false;
    ConsensusOracleResult res;
    while (it.next()) {
        rgs_histogram(it.rgs(), colors, rows);
        if (!rows_fair(rows, rgs_cluster_count(it.rgs()), profile)) continue;
        const Clustering cand = it.clustering();
        const unsigned __int128 sum = consensus_power_sum(inst, cand);
        if (!found || sum < res.power_sum) {
            found = true;
            res.best = cand;
            res.power_sum = sum;
        }
    }
    if (!found) throw std::runtime_error("exact_fair_consensus: no fair partition exists");
    res.objective = consensus_objective(inst, res.best);
    return res;
}

}  // namespace fairclust
