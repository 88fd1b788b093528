#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "corrtree/corrnet.hpp"
#include "corrtree/matrix.hpp"

namespace corrtree {

enum class Linkage { single, average };

/// One agglomeration step. Cluster ids 0..N-1 are leaves; internal ids are
/// N..2N-2 in merge order. `left` holds the smaller minimum member id.
struct MergeStep {
    std::size_t left = 0;
    std::size_t right = 0;
    double height = 0.0;
    std::size_t id = 0;
};

/// Agglomerative hierarchy: N-1 merge steps with non-decreasing heights.
struct Dendrogram {
    std::vector<std::string> symbols;
    std::vector<MergeStep> merges;
    Linkage linkage = Linkage::single;

    std::size_t leaf_count() const { return symbols.size(); }
};

/// Cophenetic (merge-height) matrix of a dendrogram; ultrametric by
/// construction. For single linkage this is the subdominant ultrametric:
/// the largest ultrametric dominated by the input distances.
struct UltrametricMatrix {
    std::vector<std::string> symbols;
    Matrix u; // N x N
};

/// Single-linkage agglomeration (cluster distance = min cross pair). Merge
/// heights coincide with the sorted MST edge weights of the same matrix.
Dendrogram single_linkage(const DistanceMatrix& dist);

/// Average-linkage agglomeration (UPGMA: cluster distance = mean over all
/// cross pairs, with exact pair counts).
Dendrogram average_linkage(const DistanceMatrix& dist);

/// u[i][j] = height of the lowest merge joining i and j.
UltrametricMatrix cophenetic_matrix(const Dendrogram& dendro);

/// The k clusters obtained by undoing the last k-1 merges. Clusters are
/// ordered by smallest member index, members in index order.
std::vector<std::vector<std::string>> cut_clusters(const Dendrogram& dendro, std::size_t k);

} // namespace corrtree
