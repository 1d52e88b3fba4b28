#include "semiring/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace semiring {

std::size_t next_pow2(std::size_t n) {
    std::size_t v = 1;
    while (v < n) v <<= 1;
    return v;
}

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_inplace: size must be a power of two");
    if (n == 1) return;

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    std::vector<std::complex<double>> twiddles(n / 2);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        // Direct twiddle evaluation per stage; recurrences drift at large sizes.
        const double angle = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        for (std::size_t k = 0; k < len / 2; ++k)
            twiddles[k] = {std::cos(angle * static_cast<double>(k)),
                           std::sin(angle * static_cast<double>(k))};
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * twiddles[k];
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }

    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& value : a) value *= inv;
    }
}

std::vector<double> fft_convolution(std::span<const double> x, std::span<const double> y) {
    if (x.empty() || y.empty()) return {};
    const std::size_t out_len = x.size() + y.size() - 1;
    const std::size_t n = next_pow2(out_len);

    std::vector<std::complex<double>> fx(n), fy(n);
    for (std::size_t i = 0; i < x.size(); ++i) fx[i] = x[i];
    for (std::size_t i = 0; i < y.size(); ++i) fy[i] = y[i];
    fft_inplace(fx, false);
    fft_inplace(fy, false);
    for (std::size_t i = 0; i < n; ++i) fx[i] *= fy[i];
    fft_inplace(fx, true);

    std::vector<double> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) out[i] = std::max(0.0, fx[i].real());
    return out;
}

}  // namespace semiring
