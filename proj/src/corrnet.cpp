#include "corrtree/corrnet.hpp"

#include <algorithm>
#include <cmath>

#include "corrtree/errors.hpp"

namespace corrtree {

CorrelationMatrix pearson_matrix(const ReturnsMatrix& returns) {
    const std::size_t t_count = returns.rows.rows();
    const std::size_t n = returns.symbols.size();
    if (n < 2)
        throw ValidationError("correlation needs at least 2 symbols");
    if (t_count < 2)
        throw ValidationError("correlation needs at least 2 return rows");

    const auto& r = returns.rows;
    const double inv_t = 1.0 / static_cast<double>(t_count);

    // Two-pass moments: means first, then centered second moments.
    std::vector<double> mean(n, 0.0), var(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t t = 0; t < t_count; ++t) s += r(t, i);
        mean[i] = s * inv_t;
        double v = 0.0;
        for (std::size_t t = 0; t < t_count; ++t) {
            const double d = r(t, i) - mean[i];
            v += d * d;
        }
        var[i] = v * inv_t;
        if (var[i] == 0.0)
            throw NumericalError("zero variance column '" + returns.symbols[i] +
                                 "': correlation undefined");
    }

    CorrelationMatrix corr;
    corr.symbols = returns.symbols;
    corr.c = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) corr.c(i, i) = 1.0;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double cov = 0.0;
            for (std::size_t t = 0; t < t_count; ++t)
                cov += (r(t, i) - mean[i]) * (r(t, j) - mean[j]);
            cov *= inv_t;
            // sqrt of the product (not product of sqrts): identical columns
            // then divide to exactly 1.
            const double denom = std::sqrt(var[i] * var[j]);
            const double c = cov / denom;
            if (!std::isfinite(c))
                throw NumericalError("correlation undefined for pair " + returns.symbols[i] +
                                     "," + returns.symbols[j]);
            const double clamped = std::clamp(c, -1.0, 1.0);
            corr.c(i, j) = clamped;
            corr.c(j, i) = clamped;
        }
    }
    return corr;
}

DistanceMatrix correlation_to_distance(const CorrelationMatrix& corr) {
    const std::size_t n = corr.symbols.size();
    DistanceMatrix dist;
    dist.symbols = corr.symbols;
    dist.d = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        dist.d(i, i) = 0.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = std::sqrt(2.0 * (1.0 - corr.c(i, j)));
            dist.d(i, j) = d;
            dist.d(j, i) = d;
        }
    }
    return dist;
}

void DistanceMatrix::validate(double tol) const {
    const std::size_t n = symbols.size();
    if (d.rows() != n || d.cols() != n)
        throw ValidationError("distance matrix shape does not match symbol count");
    for (std::size_t i = 0; i < n; ++i) {
        if (d(i, i) != 0.0)
            throw ValidationError("distance matrix diagonal must be 0");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (d(i, j) != d(j, i))
                throw ValidationError("distance matrix must be symmetric");
            if (!(d(i, j) >= 0.0 && d(i, j) <= 2.0))
                throw ValidationError("distance entries must lie in [0, 2]");
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (d(i, j) > d(i, k) + d(k, j) + tol)
                    throw ValidationError("triangle inequality violated");
}

} // namespace corrtree
