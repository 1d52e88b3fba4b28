#pragma once

#include <limits>

#include "semiring/estimate.hpp"
#include "semiring/matrix.hpp"
#include "semiring/schedule.hpp"

namespace semiring {

/// Weight-space representation of a missing edge.
inline constexpr double kAbsentEdge = std::numeric_limits<double>::infinity();

/// Checks that W is a valid weight matrix: square, diagonal exactly zero,
/// every entry nonnegative (kAbsentEdge allowed). Throws on violation.
void validate_weight_matrix(const Matrix& weights);

/// R_{i,j} = min_k X_{i,k} + Y_{k,j} on the semiring (+, min).
Matrix naive_minplus_matmul(const Matrix& x, const Matrix& y);

/// R_{i,j} = max_k X_{i,k} * Y_{k,j} on the semiring (*, max).
Matrix naive_maxtimes_matmul(const Matrix& x, const Matrix& y);

/// Elementwise e^{-w}: weights in [0, inf] map to [0, 1], absent edges to 0,
/// the zero diagonal to 1. Throws on negative weights.
Matrix transform_weights(const Matrix& weights);

/// Elementwise -log: the inverse of transform_weights; 0 maps back to inf.
Matrix untransform_distances(const Matrix& transformed);

/// Approximate (*, max) product through the p-norm ring family: Strassen
/// products of the elementwise p-th powers (on inputs rescaled to [0,1]),
/// aggregated per cell by the norm-power maximum estimator. Cells where
/// every ring value underflows come back as 0.
Matrix approx_maxtimes_matmul(const Matrix& x, const Matrix& y, const PStarSchedule& schedule,
                              const EstimateConfig& config = {});

struct ApspResult {
    Matrix distances;       // diagonal 0; inf where no path exists
    PStarSchedule schedule; // empty for exact solvers
    int squarings = 0;
};

/// Approximate all-pairs shortest path distances: transform to (*, max),
/// repeat approximate squaring ceil(log2(n-1)) times with per-iteration
/// rescaling, transform back.
ApspResult apsp_approx(const Matrix& weights, const PStarSchedule& schedule,
                       const EstimateConfig& config = {});

/// Exact O(n^3) oracle.
ApspResult floyd_warshall(const Matrix& weights);

}  // namespace semiring
