#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "corrtree/corrnet.hpp"

namespace corrtree {

/// One MST link, stored canonically with u < v. `reliability` is the
/// bootstrap fraction once link_reliability has run, otherwise empty.
struct TreeEdge {
    std::size_t u = 0;
    std::size_t v = 0;
    double distance = 0.0;
    double correlation = 0.0;
    std::optional<double> reliability;
};

/// Minimal spanning tree over N labeled nodes: exactly N-1 edges, acyclic,
/// connected, listed in Kruskal acceptance order (ascending distance).
struct SpanningTree {
    std::vector<std::string> symbols;
    std::vector<TreeEdge> edges;

    std::size_t node_count() const { return symbols.size(); }
    double total_distance() const;
};

/// Disjoint-set forest with path compression and union by rank.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns false if x and y were already in the same set.
    bool unite(std::size_t x, std::size_t y) {
        std::size_t rx = find(x), ry = find(y);
        if (rx == ry) return false;
        if (rank_[rx] < rank_[ry]) std::swap(rx, ry);
        parent_[ry] = rx;
        if (rank_[rx] == rank_[ry]) ++rank_[rx];
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> rank_;
};

/// Kruskal's algorithm over all candidate pairs. Deterministic tie-break:
/// edges are sorted by (distance, u, v). Edge correlations are back-derived
/// as 1 - d^2/2; prefer the two-argument overload in the pipeline.
SpanningTree kruskal_mst(const DistanceMatrix& dist);

/// Kruskal with edge correlations taken from the originating matrix, so
/// exporters never re-derive one quantity from the other.
SpanningTree kruskal_mst(const DistanceMatrix& dist, const CorrelationMatrix& corr);

/// Maximum edge distance on the unique tree path between two nodes.
double tree_path_max(const SpanningTree& tree, std::size_t i, std::size_t j);

/// Node degrees; they always sum to 2(N-1).
std::vector<std::size_t> degree_profile(const SpanningTree& tree);

} // namespace corrtree
