#pragma once

#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "semiring/estimate.hpp"
#include "semiring/schedule.hpp"

namespace semiring {

/// A multiset summarized only by its norm powers s(p) over a p schedule.
/// popMax estimates the current maximum from the norm-power curve and
/// subtracts its p-th powers, so the queue never stores elements.
class NormQueue {
public:
    NormQueue(const PStarSchedule& schedule, double tau = kDefaultTau);

    /// Queue over an explicit multiset: s(p) = sum_i values[i]^p.
    NormQueue(std::span<const double> values, const PStarSchedule& schedule,
              double tau = kDefaultTau);

    /// Adds v to the multiset: s(p) += v^p for every p. Rejects v < 0.
    void push(double v);

    /// Estimates the maximum, removes it from every norm power (clamped at
    /// zero), and returns it. Returns nullopt when every s(p) < tau.
    std::optional<double> pop_max(const EstimateConfig& config = {});

    /// Estimate of the current maximum without removal (nullopt if exhausted).
    std::optional<double> peek(const EstimateConfig& config = {}) const;

    bool exhausted() const;

    const NormPowerSequence& norms() const { return seq_; }
    NormPowerSequence& norms() { return seq_; }

private:
    NormPowerSequence seq_;
};

/// One recovered entry of the approximate top-k of x_i + y_j. `value` lives
/// in the scaled multiplied space used internally; `log_value` is the
/// estimate of x_i + y_j itself.
struct TopKItem {
    double value = 0.0;
    double log_value = 0.0;
    int m_star = 0;   // positive diagonal i + j
    int i = -1;       // filled by recover_indices
    int j = -1;
    bool verified = false;
};

struct TopKResult {
    std::vector<TopKItem> items;
    bool exhausted = false;   // fewer than k items carried finite mass
    double log_shift = 0.0;   // max(x) + max(y); log_value = log(value) + log_shift
};

/// Exact oracle: top k values of x_i + y_j in non-increasing order with
/// indices, ties broken lexicographically by (i, j). Rejects k > |x|*|y|.
std::vector<std::tuple<double, int, int>> naive_topk_sort(std::span<const double> x,
                                                          std::span<const double> y,
                                                          std::size_t k);

/// Exact diagonal-space oracle on nonnegative inputs: repeatedly takes the
/// max over per-diagonal maxima, reporting (value, diagonal). The value
/// multiset matches naive_topk_sort applied to the logs.
std::vector<std::pair<double, int>> naive_topk_diagonal(std::span<const double> x_prime,
                                                        std::span<const double> y_prime,
                                                        std::size_t k);

/// Approximate top-k of x_i + y_j in O((n + k) log n): transforms inputs by
/// e^{x_i - max(x)}, FFT-convolves the p-th powers once per p, then drives a
/// max-heap of per-diagonal NormQueue estimates.
TopKResult fast_topk(std::span<const double> x, std::span<const double> y, std::size_t k,
                     const PStarSchedule& schedule, const EstimateConfig& config = {});

/// Pairs a forward run with a reversed-y run to recover (i, j) per rank:
/// i = (m1 + m2 - n + 1) / 2, j = m1 - i. Each item is verified against the
/// empirical product x'_i * y'_j within verify_tol relative; failures (and
/// non-integral or out-of-range indices) stay unverified.
std::vector<TopKItem> recover_indices(const TopKResult& forward, const TopKResult& reversed,
                                      std::span<const double> x, std::span<const double> y,
                                      double verify_tol = 1e-2);

}  // namespace semiring
