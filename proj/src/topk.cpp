#include "semiring/topk.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "semiring/fft.hpp"
#include "semiring/parallel.hpp"

namespace semiring {

NormQueue::NormQueue(const PStarSchedule& schedule, double tau) : seq_(tau) {
    for (int p : schedule.exponents) seq_.add(p, 0.0);
}

NormQueue::NormQueue(std::span<const double> values, const PStarSchedule& schedule, double tau)
    : seq_(exact_norm_powers(values, schedule, tau)) {}

void NormQueue::push(double v) {
    if (v < 0.0) throw std::invalid_argument("NormQueue::push: negative value");
    for (auto& entry : seq_.mutable_entries()) entry.s += ipow(v, entry.p);
}

std::optional<double> NormQueue::peek(const EstimateConfig& config) const {
    if (exhausted()) return std::nullopt;
    EstimateConfig local = config;
    local.tau = seq_.tau();
    return estimate_max(seq_, local);
}

std::optional<double> NormQueue::pop_max(const EstimateConfig& config) {
    auto estimate = peek(config);
    if (!estimate) return std::nullopt;
    for (auto& entry : seq_.mutable_entries())
        entry.s = std::max(0.0, entry.s - ipow(*estimate, entry.p));
    return estimate;
}

bool NormQueue::exhausted() const {
    for (const auto& entry : seq_.entries())
        if (seq_.stable(entry.s)) return false;
    return true;
}

std::vector<std::tuple<double, int, int>> naive_topk_sort(std::span<const double> x,
                                                          std::span<const double> y,
                                                          std::size_t k) {
    if (k > x.size() * y.size())
        throw std::invalid_argument("naive_topk_sort: k exceeds the number of pairs");
    std::vector<std::tuple<double, int, int>> pairs;
    pairs.reserve(x.size() * y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            pairs.emplace_back(x[i] + y[j], static_cast<int>(i), static_cast<int>(j));
    auto desc = [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
        if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
        return std::get<2>(a) < std::get<2>(b);
    };
    std::partial_sort(pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(k), pairs.end(),
                      desc);
    pairs.resize(k);
    return pairs;
}

std::vector<std::pair<double, int>> naive_topk_diagonal(std::span<const double> x_prime,
                                                        std::span<const double> y_prime,
                                                        std::size_t k) {
    if (k > x_prime.size() * y_prime.size())
        throw std::invalid_argument("naive_topk_diagonal: k exceeds the number of pairs");
    for (double v : x_prime)
        if (v < 0.0) throw std::invalid_argument("naive_topk_diagonal: negative entry");
    for (double v : y_prime)
        if (v < 0.0) throw std::invalid_argument("naive_topk_diagonal: negative entry");

    const std::size_t nx = x_prime.size(), ny = y_prime.size();
    const std::size_t num_diagonals = nx + ny - 1;
    std::vector<std::vector<double>> diagonals(num_diagonals);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) diagonals[i + j].push_back(x_prime[i] * y_prime[j]);

    std::vector<double> psi(num_diagonals, -1.0);  // -1 marks an empty diagonal
    for (std::size_t m = 0; m < num_diagonals; ++m)
        psi[m] = *std::max_element(diagonals[m].begin(), diagonals[m].end());

    std::vector<std::pair<double, int>> result;
    result.reserve(k);
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t best = 0;
        for (std::size_t m = 1; m < num_diagonals; ++m)
            if (psi[m] > psi[best]) best = m;
        result.emplace_back(psi[best], static_cast<int>(best));

        auto& diag = diagonals[best];
        diag.erase(std::find(diag.begin(), diag.end(), psi[best]));
        psi[best] = diag.empty() ? -1.0 : *std::max_element(diag.begin(), diag.end());
    }
    return result;
}

TopKResult fast_topk(std::span<const double> x, std::span<const double> y, std::size_t k,
                     const PStarSchedule& schedule, const EstimateConfig& config) {
    if (k < 1) throw std::invalid_argument("fast_topk: k must be >= 1");
    if (x.empty() || x.size() != y.size())
        throw std::invalid_argument("fast_topk: inputs must be nonempty and of equal length");
    const std::size_t n = x.size();
    const std::size_t num_diagonals = 2 * n - 1;

    // Shift before exponentiating so the transformed inputs land in (0,1]
    // regardless of the magnitude of x and y.
    const double shift_x = *std::max_element(x.begin(), x.end());
    const double shift_y = *std::max_element(y.begin(), y.end());
    std::vector<double> xp(n), yp(n);
    for (std::size_t i = 0; i < n; ++i) xp[i] = std::exp(x[i] - shift_x);
    for (std::size_t i = 0; i < n; ++i) yp[i] = std::exp(y[i] - shift_y);

    const std::size_t num_p = schedule.exponents.size();
    std::vector<std::vector<double>> sigma(num_p);
    parallel_for(num_p, [&](std::size_t pi) {
        const int p = schedule.exponents[pi];
        std::vector<double> xq(n), yq(n);
        for (std::size_t i = 0; i < n; ++i) xq[i] = ipow(xp[i], p);
        for (std::size_t i = 0; i < n; ++i) yq[i] = ipow(yp[i], p);
        sigma[pi] = fft_convolution(xq, yq);
    });

    std::vector<NormQueue> queues;
    queues.reserve(num_diagonals);
    for (std::size_t m = 0; m < num_diagonals; ++m) {
        NormQueue q(schedule, config.tau);
        auto& entries = q.norms().mutable_entries();
        for (std::size_t pi = 0; pi < num_p; ++pi) entries[pi].s = sigma[pi][m];
        queues.push_back(std::move(q));
    }

    struct HeapEntry {
        double psi;
        int m;
    };
    auto lower_priority = [](const HeapEntry& a, const HeapEntry& b) {
        if (a.psi != b.psi) return a.psi < b.psi;
        return a.m > b.m;  // ties pop the lower diagonal first
    };
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, decltype(lower_priority)> heap(
        lower_priority);
    for (std::size_t m = 0; m < num_diagonals; ++m)
        if (auto psi = queues[m].peek(config)) heap.push({*psi, static_cast<int>(m)});

    TopKResult result;
    result.log_shift = shift_x + shift_y;
    result.items.reserve(k);
    while (result.items.size() < k) {
        if (heap.empty()) {
            result.exhausted = true;
            break;
        }
        const HeapEntry top = heap.top();
        heap.pop();
        const double popped = *queues[top.m].pop_max(config);

        TopKItem item;
        item.value = popped;
        item.log_value = std::log(popped) + result.log_shift;
        item.m_star = top.m;
        result.items.push_back(item);

        if (auto next = queues[top.m].peek(config)) {
            // Re-insert with the refreshed estimate; clamping keeps the
            // popped sequence non-increasing.
            heap.push({std::min(*next, popped), top.m});
        }
    }
    return result;
}

std::vector<TopKItem> recover_indices(const TopKResult& forward, const TopKResult& reversed,
                                      std::span<const double> x, std::span<const double> y,
                                      double verify_tol) {
    if (forward.items.size() != reversed.items.size())
        throw std::invalid_argument("recover_indices: mismatched run lengths");
    if (x.empty() || x.size() != y.size())
        throw std::invalid_argument("recover_indices: inputs must be nonempty and of equal length");
    const int n = static_cast<int>(x.size());

    const double shift_x = *std::max_element(x.begin(), x.end());
    const double shift_y = *std::max_element(y.begin(), y.end());

    std::vector<TopKItem> items = forward.items;
    for (std::size_t rank = 0; rank < items.size(); ++rank) {
        TopKItem& item = items[rank];
        item.i = -1;
        item.j = -1;
        item.verified = false;

        const int m1 = item.m_star;
        const int m2 = reversed.items[rank].m_star;
        const int twice_i = m1 + m2 - n + 1;
        if (twice_i < 0 || twice_i % 2 != 0) continue;
        const int i = twice_i / 2;
        const int j = m1 - i;
        if (i >= n || j < 0 || j >= n) continue;

        item.i = i;
        item.j = j;
        if (item.value <= 0.0) continue;
        const double empirical = std::exp(x[i] - shift_x) * std::exp(y[j] - shift_y);
        item.verified = std::abs(empirical - item.value) <= verify_tol * item.value;
    }
    return items;
}

}  // namespace semiring
