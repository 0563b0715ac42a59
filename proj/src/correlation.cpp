#include "fairclust/correlation.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "fairclust/equi.hpp"
#include "fairclust/general.hpp"
#include "fairclust/oracle.hpp"

namespace fairclust {

void validate(CorrelationInstance& inst) {
    for (const auto& [u, v] : inst.plus_edges) {
        if (u >= v) throw std::invalid_argument("correlation instance: edges must satisfy u < v");
        if (v >= inst.n) throw std::invalid_argument("correlation instance: edge endpoint out of range");
    }
    std::sort(inst.plus_edges.begin(), inst.plus_edges.end());
    if (std::adjacent_find(inst.plus_edges.begin(), inst.plus_edges.end()) != inst.plus_edges.end())
        throw std::invalid_argument("correlation instance: duplicate edge");
}

std::uint64_t cc_cost(const CorrelationInstance& inst, const Clustering& c) {
    if (c.size() != inst.n) throw std::invalid_argument("cc_cost: clustering does not match instance size");
    std::uint64_t intra_plus = 0;
    for (const auto& [u, v] : inst.plus_edges)
        if (c.assign[u] == c.assign[v]) ++intra_plus;
    std::vector<std::uint64_t> size(c.cluster_count, 0);
    for (ClusterId a : c.assign) ++size[a];
    std::uint64_t intra_pairs = 0;
    for (std::uint64_t s : size) intra_pairs += pairs_of(s);
    return (inst.plus_edges.size() - intra_plus) + (intra_pairs - intra_plus);
}

namespace {

// Unbiased bounded draw, independent of the standard library's
// distribution implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

}  // namespace

Clustering pivot_cc(const CorrelationInstance& inst, std::uint64_t seed) {
    std::vector<std::vector<PointId>> adj(inst.n);
    for (const auto& [u, v] : inst.plus_edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::mt19937_64 rng(seed);
    Clustering c;
    c.assign.assign(inst.n, 0);
    std::vector<bool> clustered(inst.n, false);

    // Visiting a uniform random permutation and skipping already-clustered
    // points draws each pivot uniformly from the unclustered ones.
    std::vector<PointId> order(inst.n);
    for (PointId v = 0; v < inst.n; ++v) order[v] = v;
    for (std::size_t i = inst.n; i > 1; --i) std::swap(order[i - 1], order[bounded(rng, i)]);

    for (PointId pivot : order) {
        if (clustered[pivot]) continue;
        const ClusterId id = c.cluster_count++;
        c.assign[pivot] = id;
        clustered[pivot] = true;
        for (PointId u : adj[pivot])
            if (!clustered[u]) {
                c.assign[u] = id;
                clustered[u] = true;
            }
    }
    return c;
}

Clustering fairify_cc(const CorrelationInstance& inst, const ColorAssignment& colors, const CcBaseline& baseline) {
    if (colors.size() != inst.n) throw std::invalid_argument("fairify_cc: colors do not match instance size");
    Clustering base;
    switch (baseline.kind) {
        case CcBaseline::Kind::Pivot:
            base = pivot_cc(inst, baseline.seed);
            break;
        case CcBaseline::Kind::ExactOracle:
            base = exact_min_cc(inst).best;
            break;
        case CcBaseline::Kind::Provided:
            base = baseline.provided;
            if (base.size() != inst.n) throw std::invalid_argument("fairify_cc: provided baseline size mismatch");
            break;
    }
    const auto counts = color_counts(colors);
    const bool equal = std::all_of(counts.begin(), counts.end(), [&](std::uint64_t c) { return c == counts[0]; });
    return equal ? fair_equi(base, colors) : fair_general(base, colors);
}

}  // namespace fairclust
