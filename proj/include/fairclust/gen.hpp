#pragma once
// Instance generators: seeded random colored clusterings with exact color
// profiles, and the 3-Partition reduction that produces hard closest-fair
// instances together with their YES-certificates.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "fairclust/core.hpp"
#include "fairclust/fairness.hpp"

namespace fairclust {

enum class ClusterLaw { Uniform, Geometric };

struct RandomSpec {
    std::uint32_t n = 0;
    std::uint32_t k = 1;
    std::vector<std::uint64_t> profile;  // empty = equi (1:...:1)
    ClusterLaw law = ClusterLaw::Uniform;
    std::uint64_t seed = 0;
};

struct GeneratedInstance {
    Clustering clustering;
    ColorAssignment colors;
};

/// Deterministic per seed; global color counts match the requested profile
/// exactly. Throws std::invalid_argument when n is not a multiple of the
/// profile weight.
GeneratedInstance gen_random(const RandomSpec& spec);

/// Output of the 3-Partition reduction: the instance clustering H (one
/// cluster of T points of each color c_2..c_k per triple slot, plus one
/// monochromatic c_1 cluster per input integer), the target distance tau,
/// and, when a valid partition into triples is known, the certificate
/// clustering F with pair_distance(H, F) == tau.
struct HardnessInstance {
    Clustering h;
    ColorAssignment colors;
    std::uint64_t tau = 0;
    std::uint64_t t = 0;  // triple target sum
    std::optional<Clustering> certificate;
    std::vector<std::size_t> out_of_range;  // indices with x_i outside (T/4, T/2)
};

/// Builds the reduction instance for multiset S and k >= 3 colors. When
/// `partition` lists index triples (each summing to T) they are used for the
/// certificate; otherwise a brute-force triple search runs for |S| <= 15.
/// Throws std::invalid_argument when |S| is not divisible by 3 or the total
/// is not divisible by |S|/3.
HardnessInstance gen_hardness(const std::vector<std::uint64_t>& s, std::uint32_t k,
                              const std::optional<std::vector<std::array<std::size_t, 3>>>& partition = std::nullopt);

}  // namespace fairclust
