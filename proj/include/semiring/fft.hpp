#pragma once

#include <complex>
#include <span>
#include <vector>

namespace semiring {

std::size_t next_pow2(std::size_t n);

/// In-place radix-2 FFT. a.size() must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

/// Linear convolution of two nonnegative vectors via zero-padded FFT,
/// length |x|+|y|-1. Tiny negative round-off is clamped to zero.
std::vector<double> fft_convolution(std::span<const double> x, std::span<const double> y);

}  // namespace semiring
