#pragma once
// Color bookkeeping: global color profiles, the fairness and p-divisibility
// predicates, and the per-cluster surplus / deficit primitives shared by the
// balancing algorithms.
//
// A clustering is fair when every cluster's color histogram is an integer
// multiple of the reduced global ratio p_1 : ... : p_k. It is p-divisible
// when every cluster's count of color j is a multiple of p_j.

#include <cstdint>
#include <vector>

#include "fairclust/core.hpp"

namespace fairclust {

using ColorId = std::uint32_t;

struct ColorAssignment {
    std::vector<ColorId> color;  // point id -> color in 0..k-1
    ColorId color_count = 0;

    std::size_t size() const { return color.size(); }
};

/// Reduced global ratio: count(c_j, V) = p[j] * scale, gcd(p) = 1.
struct ColorProfile {
    std::vector<std::uint64_t> p;
    std::uint64_t scale = 0;
};

/// Per-cluster color counts; histogram[i][j] = points of color j in cluster i.
using ColorHistogram = std::vector<std::vector<std::uint64_t>>;

/// Checks the ColorAssignment invariants: every color id < color_count and
/// every color class non-empty. Throws std::invalid_argument when violated.
void validate(const ColorAssignment& colors);

/// Global color counts, indexed by color id.
std::vector<std::uint64_t> color_counts(const ColorAssignment& colors);

ColorHistogram color_histogram(const Clustering& c, const ColorAssignment& colors);

/// Global counts divided by their gcd. Throws on an empty color class.
ColorProfile reduced_profile(const ColorAssignment& colors);

/// True iff every cluster's histogram equals t * (p_1,...,p_k) for some
/// non-negative integer t (with p the reduced global profile).
bool is_fair(const Clustering& c, const ColorAssignment& colors);

/// True iff in every cluster the count of color j is a multiple of
/// profile.p[j] (zero counts allowed).
bool is_p_divisible(const Clustering& c, const ColorAssignment& colors, const ColorProfile& profile);

/// Surplus of a cluster w.r.t. color j: the color-j points to remove so the
/// remainder is a multiple of p_j. Size is c_j mod p_j when p_j does not
/// divide c_j, p_j when it divides and c_j > 0, and 0 when c_j = 0.
/// Selected points are the lowest ids of that color.
std::vector<PointId> surplus_pdc(const std::vector<PointId>& cluster, ColorId color_j, std::uint64_t p_j,
                                 const ColorAssignment& colors);

/// Points of color j needed to lift the cluster to the next multiple of p_j;
/// 0 when the count is already a multiple (including zero).
std::uint64_t deficit_size(const std::vector<PointId>& cluster, ColorId color_j, std::uint64_t p_j,
                           const ColorAssignment& colors);

}  // namespace fairclust
