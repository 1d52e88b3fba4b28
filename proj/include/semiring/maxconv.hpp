#pragma once

#include <span>
#include <vector>

#include "semiring/estimate.hpp"
#include "semiring/schedule.hpp"

namespace semiring {

/// z_m = sum_i x_i * y_{m-i}, the O(n^2) oracle for fft_convolution.
std::vector<double> naive_convolution(std::span<const double> x, std::span<const double> y);

/// z_m = max_i x_i * y_{m-i}, the exact O(n^2) max-convolution.
std::vector<double> naive_max_convolution(std::span<const double> x, std::span<const double> y);

/// Number of products on the positive diagonal m of the |x| x |y| outer grid.
std::size_t diagonal_length(std::size_t m, std::size_t nx, std::size_t ny);

struct MaxConvResult {
    std::vector<double> values;
    /// Base exponent the estimator settled on per index; 0 marks indices
    /// where every ring result underflowed (value reported as 0).
    std::vector<int> p_used;
};

/// Approximate max-convolution through the p-norm ring family: inputs are
/// scaled to [0,1], convolved by FFT at elementwise powers p for every p in
/// the schedule, and each output index is projected back to a maximum from
/// its norm-power sequence.
MaxConvResult fast_max_convolution_detailed(std::span<const double> x, std::span<const double> y,
                                            const PStarSchedule& schedule,
                                            const EstimateConfig& config = {});

std::vector<double> fast_max_convolution(std::span<const double> x, std::span<const double> y,
                                         const PStarSchedule& schedule,
                                         const EstimateConfig& config = {});

}  // namespace semiring
