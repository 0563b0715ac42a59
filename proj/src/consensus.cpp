#include "fairclust/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fairclust/equi.hpp"
#include "fairclust/general.hpp"

namespace fairclust {

void validate(const ConsensusInstance& inst) {
    if (inst.inputs.empty()) throw std::invalid_argument("consensus instance: needs at least one input clustering");
    for (const Clustering& c : inst.inputs) {
        validate(c);
        if (c.size() != inst.inputs.front().size())
            throw std::invalid_argument("consensus instance: inputs over different point sets");
    }
}

namespace {

unsigned __int128 checked_pow(std::uint64_t base, std::uint32_t exp) {
    unsigned __int128 result = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && result > ~static_cast<unsigned __int128>(0) / base)
            throw std::overflow_error("consensus objective: distance power exceeds 128 bits");
        result *= base;
    }
    return result;
}

}  // namespace

unsigned __int128 consensus_power_sum(const ConsensusInstance& inst, const Clustering& c) {
    unsigned __int128 acc = 0;
    for (const Clustering& input : inst.inputs) {
        const std::uint64_t d = pair_distance(input, c);
        if (inst.norm_ell == kCenterNorm) {
            acc = std::max<unsigned __int128>(acc, d);
        } else {
            const unsigned __int128 term = checked_pow(d, inst.norm_ell);
            if (acc > ~static_cast<unsigned __int128>(0) - term)
                throw std::overflow_error("consensus objective: power sum exceeds 128 bits");
            acc += term;
        }
    }
    return acc;
}

double consensus_objective(const ConsensusInstance& inst, const Clustering& c) {
    const unsigned __int128 sum = consensus_power_sum(inst, c);
    const long double s = static_cast<long double>(sum);
    if (inst.norm_ell == kCenterNorm || inst.norm_ell == 1) return static_cast<double>(s);
    return static_cast<double>(std::pow(s, 1.0L / inst.norm_ell));
}

std::size_t best_input_index(const ConsensusInstance& inst) {
    validate(inst);
    std::size_t best = 0;
    unsigned __int128 best_sum = consensus_power_sum(inst, inst.inputs[0]);
    for (std::size_t i = 1; i < inst.inputs.size(); ++i) {
        const unsigned __int128 sum = consensus_power_sum(inst, inst.inputs[i]);
        if (sum < best_sum) {
            best_sum = sum;
            best = i;
        }
    }
    return best;
}

Clustering fair_consensus(const ConsensusInstance& inst, const ColorAssignment& colors) {
    validate(inst);
    if (colors.size() != inst.inputs.front().size())
        throw std::invalid_argument("fair_consensus: colors do not match the point set");
    const Clustering& chosen = inst.inputs[best_input_index(inst)];
    const auto counts = color_counts(colors);
    const bool equal = std::all_of(counts.begin(), counts.end(), [&](std::uint64_t c) { return c == counts[0]; });
    return equal ? fair_equi(chosen, colors) : fair_general(chosen, colors);
}

}  // namespace fairclust
