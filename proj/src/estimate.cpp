#include "semiring/estimate.hpp"

#include <algorithm>
#include <cmath>

namespace semiring {

namespace {

struct RawDetail {
    double value;
    int p;
};

// Largest stable exponent and the corresponding plain norm estimate.
std::optional<RawDetail> raw_detail(const NormPowerSequence& seq) {
    auto entries = seq.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        if (seq.stable(it->s)) return RawDetail{std::pow(it->s, 1.0 / it->p), it->p};
    }
    return std::nullopt;
}

// Ratio estimate at the largest base p with stable entries at p and 2p.
std::optional<RawDetail> r1_detail(const NormPowerSequence& seq) {
    auto entries = seq.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        const double* s2 = seq.find(2 * it->p);
        if (!s2 || !seq.stable(it->s) || !seq.stable(*s2)) continue;
        return RawDetail{std::pow(*s2 / it->s, 1.0 / it->p), it->p};
    }
    return std::nullopt;
}

// Hankel rows are near parallel below this; the projection carries no
// second-value signal and is handed down to r=1.
constexpr double kParallelTol = 1e-10;
constexpr double kLeadingCoeffTol = 1e-12;
constexpr double kNegativeRootTol = 1e-9;

std::optional<ProjectionModel> project_r2_at_base(const NormPowerSequence& seq, int base_p) {
    const double* m1 = seq.find(base_p);
    const double* m2 = seq.find(2 * base_p);
    const double* m3 = seq.find(3 * base_p);
    const double* m4 = seq.find(4 * base_p);
    if (!m1 || !m2 || !m3 || !m4) return std::nullopt;
    if (!seq.stable(*m1) || !seq.stable(*m2) || !seq.stable(*m3) || !seq.stable(*m4))
        return std::nullopt;

    // Condition the system by moving to a'_j = a_j / c with c = s(2p)/s(p),
    // the norm-power ratio; the scaled moments are O(n) regardless of the
    // magnitude of u. Roots and coefficients map back exactly.
    const double c = *m2 / *m1;
    const double w1 = *m1 / c;
    const double w2 = *m2 / (c * c);
    const double w3 = *m3 / (c * c * c);
    const double w4 = *m4 / (c * c * c * c);

    // Null vector of [[w1,w2,w3],[w2,w3,w4]] as the cross product of the rows.
    const double g0 = w2 * w4 - w3 * w3;
    const double g1 = w3 * w2 - w1 * w4;
    const double g2 = w1 * w3 - w2 * w2;

    const double row1 = std::sqrt(w1 * w1 + w2 * w2 + w3 * w3);
    const double row2 = std::sqrt(w2 * w2 + w3 * w3 + w4 * w4);
    const double gnorm = std::sqrt(g0 * g0 + g1 * g1 + g2 * g2);
    if (!(gnorm > kParallelTol * row1 * row2)) return std::nullopt;
    if (std::abs(g2) <= kLeadingCoeffTol * gnorm) return std::nullopt;

    const double disc = g1 * g1 - 4.0 * g0 * g2;
    if (disc < 0.0) return std::nullopt;

    // Numerically stable quadratic roots.
    const double q = -0.5 * (g1 + std::copysign(std::sqrt(disc), g1));
    double roots[2];
    int nroots = 0;
    roots[nroots++] = q / g2;
    if (q != 0.0) roots[nroots++] = g0 / q;

    ProjectionModel model;
    model.r = 2;
    model.base_p = base_p;
    for (int i = 0; i < nroots; ++i) {
        double a = c * roots[i];  // back to the unscaled a-domain, a_j = alpha_j^p
        if (!std::isfinite(a)) continue;
        if (a < 0.0) {
            if (a < -kNegativeRootTol * c) continue;  // genuinely negative: reject
            a = 0.0;
        }
        model.alphas.push_back(std::pow(a, 1.0 / base_p));
    }
    if (model.alphas.empty()) return std::nullopt;
    std::sort(model.alphas.begin(), model.alphas.end());

    // Coefficients in the unscaled norm-power basis, unit norm.
    double gamma[3] = {g0, g1 / c, g2 / (c * c)};
    const double norm = std::sqrt(gamma[0] * gamma[0] + gamma[1] * gamma[1] + gamma[2] * gamma[2]);
    model.gammas = {gamma[0] / norm, gamma[1] / norm, gamma[2] / norm};
    return model;
}

}  // namespace

std::optional<double> estimate_max_raw(const NormPowerSequence& seq,
                                       std::optional<std::size_t> n_hint, bool bias_correct) {
    auto raw = raw_detail(seq);
    if (!raw) return std::nullopt;
    double value = raw->value;
    if (bias_correct && n_hint && *n_hint > 0)
        value /= std::pow(static_cast<double>(*n_hint), 1.0 / raw->p);
    return value;
}

std::optional<double> estimate_max_r1(const NormPowerSequence& seq) {
    if (auto r1 = r1_detail(seq)) return r1->value;
    if (auto raw = raw_detail(seq)) return raw->value;
    return std::nullopt;
}

std::optional<ProjectionModel> estimate_max_r2(const NormPowerSequence& seq) {
    auto entries = seq.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        // The largest base whose full multiple set {p,2p,3p,4p} is stable.
        const double* m2 = seq.find(2 * it->p);
        const double* m3 = seq.find(3 * it->p);
        const double* m4 = seq.find(4 * it->p);
        if (!m2 || !m3 || !m4) continue;
        if (!seq.stable(it->s) || !seq.stable(*m2) || !seq.stable(*m3) || !seq.stable(*m4))
            continue;
        return project_r2_at_base(seq, it->p);
    }
    return std::nullopt;
}

MaxEstimate estimate_max_detail(const NormPowerSequence& seq, const EstimateConfig& config) {
    auto raw = raw_detail(seq);
    if (!raw) return {};  // all-underflow

    auto r1 = r1_detail(seq);
    if (config.r >= 2) {
        if (auto model = estimate_max_r2(seq)) {
            // Accept the projection only inside the r1 <= max <= raw sandwich;
            // roots pushed outside it by round-off degrade to r=1.
            const double est = model->estimate();
            const double lower = r1 ? r1->value : 0.0;
            const double upper = raw->value;
            if (est >= lower * (1.0 - 1e-12) && est <= upper * (1.0 + 1e-12))
                return {est, model->base_p, EstimateMethod::R2};
        }
    }
    if (config.r >= 1 && r1) return {r1->value, r1->p, EstimateMethod::R1};

    double value = raw->value;
    if (config.bias_correct && config.n_hint && *config.n_hint > 0)
        value /= std::pow(static_cast<double>(*config.n_hint), 1.0 / raw->p);
    return {value, raw->p, EstimateMethod::Raw};
}

double estimate_max(const NormPowerSequence& seq, const EstimateConfig& config) {
    return estimate_max_detail(seq, config).value;
}

double relative_error_bound(std::size_t n, int p, bool corrected) {
    const double nd = static_cast<double>(n);
    const double pd = static_cast<double>(p);
    if (corrected) return 1.0 - std::pow(nd, -1.0 / pd);
    return std::pow(nd, 1.0 / pd) - 1.0;
}

}  // namespace semiring
