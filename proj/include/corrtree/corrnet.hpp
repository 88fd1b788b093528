#pragma once

#include <string>
#include <vector>

#include "corrtree/ingest.hpp"
#include "corrtree/matrix.hpp"

namespace corrtree {

/// Pearson cross-correlation matrix. Symmetric as stored, unit diagonal,
/// entries clamped to [-1, 1].
struct CorrelationMatrix {
    std::vector<std::string> symbols;
    Matrix c; // N x N
};

/// Metric distance matrix d = sqrt(2(1 - c)). Symmetric, zero diagonal,
/// entries in [0, 2].
struct DistanceMatrix {
    std::vector<std::string> symbols;
    Matrix d; // N x N

    /// Check symmetry, diagonal, range, and the triangle inequality
    /// (within `tol`). Throws ValidationError. Intended for matrices built
    /// by hand rather than via correlation_to_distance.
    void validate(double tol = 1e-9) const;
};

/// Population-moment Pearson correlation over all return rows, one value per
/// column pair, fixed summation order. Zero-variance columns are an error.
CorrelationMatrix pearson_matrix(const ReturnsMatrix& returns);

/// Map correlations to distances, d = sqrt(2(1 - c)). Diagonal is exactly 0.
DistanceMatrix correlation_to_distance(const CorrelationMatrix& corr);

} // namespace corrtree
