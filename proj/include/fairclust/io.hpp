#pragma once
// File formats. All formats are LF-terminated UTF-8 CSV of non-negative
// integers:
//   clustering file:  header "point,color,cluster", one row per point
//   correlation file: first line "nodes,N", then one "u,v" line (u < v)
//                     per "+" edge
//   consensus file:   header "point,color,c1,...,cm", column c_i holding
//                     input clustering i
// Reading normalizes cluster labels (first-appearance order), so a write
// after read is byte-stable.

#include <stdexcept>
#include <string>
#include <vector>

#include "fairclust/consensus.hpp"
#include "fairclust/core.hpp"
#include "fairclust/correlation.hpp"
#include "fairclust/fairness.hpp"

namespace fairclust {

/// File access or file format problem (distinct from semantic validation
/// errors, which use std::invalid_argument).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct LabeledClustering {
    Clustering clustering;
    ColorAssignment colors;
};

LabeledClustering read_clustering(const std::string& path);
void write_clustering(const std::string& path, const Clustering& c, const ColorAssignment& colors);

CorrelationInstance read_correlation(const std::string& path);
void write_correlation(const std::string& path, const CorrelationInstance& inst);

struct ConsensusFile {
    ConsensusInstance instance;  // norm_ell left at its default
    ColorAssignment colors;
};

ConsensusFile read_consensus(const std::string& path);
void write_consensus(const std::string& path, const std::vector<Clustering>& inputs, const ColorAssignment& colors);

}  // namespace fairclust
