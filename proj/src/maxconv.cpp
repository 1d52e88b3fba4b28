#include "semiring/maxconv.hpp"

#include <algorithm>
#include <cmath>

#include "semiring/fft.hpp"
#include "semiring/parallel.hpp"
#include "semiring/scaling.hpp"

namespace semiring {

std::vector<double> naive_convolution(std::span<const double> x, std::span<const double> y) {
    if (x.empty() || y.empty()) return {};
    std::vector<double> out(x.size() + y.size() - 1, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
    return out;
}

std::vector<double> naive_max_convolution(std::span<const double> x, std::span<const double> y) {
    if (x.empty() || y.empty()) return {};
    std::vector<double> out(x.size() + y.size() - 1, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = std::max(out[i + j], x[i] * y[j]);
    return out;
}

std::size_t diagonal_length(std::size_t m, std::size_t nx, std::size_t ny) {
    return std::min({m + 1, nx, ny, nx + ny - 1 - m});
}

MaxConvResult fast_max_convolution_detailed(std::span<const double> x, std::span<const double> y,
                                            const PStarSchedule& schedule,
                                            const EstimateConfig& config) {
    MaxConvResult result;
    if (x.empty() || y.empty()) return result;
    const std::size_t out_len = x.size() + y.size() - 1;
    result.values.assign(out_len, 0.0);
    result.p_used.assign(out_len, 0);

    std::vector<double> xs(x.begin(), x.end());
    std::vector<double> ys(y.begin(), y.end());
    const bool x_zero = std::all_of(xs.begin(), xs.end(), [](double v) { return v == 0.0; });
    const bool y_zero = std::all_of(ys.begin(), ys.end(), [](double v) { return v == 0.0; });
    if (x_zero || y_zero) return result;  // all-zero output by convention

    const double x_factor = scale_to_unit(xs);
    const double y_factor = scale_to_unit(ys);
    const double rescale = x_factor * y_factor;

    const std::size_t num_p = schedule.exponents.size();
    std::vector<std::vector<double>> rings(num_p);
    parallel_for(num_p, [&](std::size_t pi) {
        const int p = schedule.exponents[pi];
        std::vector<double> xp(xs.size()), yp(ys.size());
        for (std::size_t i = 0; i < xs.size(); ++i) xp[i] = ipow(xs[i], p);
        for (std::size_t i = 0; i < ys.size(); ++i) yp[i] = ipow(ys[i], p);
        rings[pi] = fft_convolution(xp, yp);
    });

    NormPowerSequence seq(config.tau);
    EstimateConfig local = config;
    for (std::size_t m = 0; m < out_len; ++m) {
        seq.clear();
        for (std::size_t pi = 0; pi < num_p; ++pi) seq.add(schedule.exponents[pi], rings[pi][m]);
        local.n_hint = diagonal_length(m, x.size(), y.size());
        const MaxEstimate est = estimate_max_detail(seq, local);
        result.values[m] = est.value * rescale;
        result.p_used[m] = est.base_p;
    }
    return result;
}

std::vector<double> fast_max_convolution(std::span<const double> x, std::span<const double> y,
                                         const PStarSchedule& schedule,
                                         const EstimateConfig& config) {
    return fast_max_convolution_detailed(x, y, schedule, config).values;
}

}  // namespace semiring
