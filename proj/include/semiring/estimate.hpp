#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "semiring/norm_sequence.hpp"

namespace semiring {

struct EstimateConfig {
    int r = 2;                          // projection order (1 or 2)
    bool bias_correct = false;          // divide the raw estimate by n_hint^{1/p}
    std::optional<std::size_t> n_hint;  // length of the implicit vector u, when known
    double tau = kDefaultTau;           // stability threshold for sequences built by solvers
};

enum class EstimateMethod { None, Raw, R1, R2 };

struct MaxEstimate {
    double value = 0.0;
    int base_p = 0;  // base exponent of the method that produced the value
    EstimateMethod method = EstimateMethod::None;
};

/// Result of an order-r projection of a norm-power sequence: the multiset
/// behind the sequence is modeled with r distinct values alpha_j, obtained
/// as roots of the polynomial with coefficients gamma (a null vector of the
/// r x (r+1) Hankel matrix of norm powers at base_p).
struct ProjectionModel {
    int r = 2;
    int base_p = 0;
    std::array<double, 3> gammas{};  // gamma_0..gamma_r, unit norm
    std::vector<double> alphas;      // nonnegative, ascending

    /// The maximum-value estimate: max of the recovered alphas.
    double estimate() const { return alphas.empty() ? 0.0 : alphas.back(); }
};

/// Plain norm estimate s(p)^{1/p} at the largest stable p.
/// With bias_correct and n_hint, divides by n_hint^{1/p}.
/// Returns nullopt when every entry is below tau (all-underflow).
std::optional<double> estimate_max_raw(const NormPowerSequence& seq,
                                       std::optional<std::size_t> n_hint = {},
                                       bool bias_correct = false);

/// Ratio estimate (s(2p)/s(p))^{1/p} at the largest base p with both entries
/// stable; falls through to the raw estimate when no such pair exists.
std::optional<double> estimate_max_r1(const NormPowerSequence& seq);

/// Order-2 projection at the largest base p whose entries at p, 2p, 3p, 4p
/// are all stable. Returns nullopt when no full multiple set is stable or
/// the projection degenerates (parallel Hankel rows, vanishing leading
/// coefficient, complex or out-of-range roots); callers degrade to r=1.
std::optional<ProjectionModel> estimate_max_r2(const NormPowerSequence& seq);

/// The black-box maximum estimator: dispatches r2 -> r1 -> raw in
/// degradation order and returns 0 when no entry is stable.
double estimate_max(const NormPowerSequence& seq, const EstimateConfig& config = {});

/// Same as estimate_max but also reports which method and base exponent
/// produced the value.
MaxEstimate estimate_max_detail(const NormPowerSequence& seq, const EstimateConfig& config = {});

/// Worst-case relative error of the plain norm estimate on a length-n vector:
/// n^{1/p} - 1, or 1 - n^{-1/p} for the bias-corrected estimator.
double relative_error_bound(std::size_t n, int p, bool corrected = false);

}  // namespace semiring
