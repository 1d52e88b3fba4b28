#include "semiring/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "semiring/apsp.hpp"
#include "semiring/io.hpp"
#include "semiring/topk.hpp"

namespace semiring {

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

PStarSchedule schedule_for(const RunConfig& config) {
    return build_p_schedule(config.p_base_max, config.r);
}

EstimateConfig estimate_config_for(const RunConfig& config) {
    EstimateConfig estimate;
    estimate.r = config.r;
    estimate.bias_correct = config.bias_correct;
    estimate.tau = config.tau;
    return estimate;
}

double matrix_mse(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix_mse: shape mismatch");
    double sum = 0.0;
    const auto da = a.data();
    const auto db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) {
        if (std::isinf(da[i]) && std::isinf(db[i])) continue;
        const double diff = da[i] - db[i];
        sum += diff * diff;
    }
    return sum / static_cast<double>(da.size());
}

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + mid, values.end());
    if (values.size() % 2 == 1) return values[mid];
    const double upper = values[mid];
    std::nth_element(values.begin(), values.begin() + mid - 1, values.begin() + mid);
    return 0.5 * (values[mid - 1] + upper);
}

std::vector<ApspBenchRow> bench_apsp(const std::vector<std::size_t>& sizes, int replicates,
                                     const RunConfig& config) {
    const PStarSchedule schedule = schedule_for(config);
    const EstimateConfig estimate = estimate_config_for(config);

    std::vector<ApspBenchRow> rows;
    rows.reserve(sizes.size());
    for (std::size_t n : sizes) {
        ApspBenchRow row;
        row.n = n;
        for (int rep = 0; rep < replicates; ++rep) {
            const Matrix weights = generate_apsp_problem(n, config.seed + static_cast<std::uint64_t>(rep));

            Timer oracle_timer;
            const ApspResult exact = floyd_warshall(weights);
            row.oracle_time_s += oracle_timer.seconds();

            Timer approx_timer;
            const ApspResult approx = apsp_approx(weights, schedule, estimate);
            row.approx_time_s += approx_timer.seconds();

            row.mse += matrix_mse(approx.distances, exact.distances);
        }
        const double reps = static_cast<double>(replicates);
        row.oracle_time_s /= reps;
        row.approx_time_s /= reps;
        row.mse /= reps;
        rows.push_back(row);
    }
    return rows;
}

std::vector<TopkBenchRow> bench_topk(const std::vector<std::size_t>& sizes,
                                     const std::vector<Distribution>& distributions,
                                     const RunConfig& config, std::size_t oracle_cutoff) {
    const PStarSchedule schedule = schedule_for(config);
    const EstimateConfig estimate = estimate_config_for(config);

    std::vector<TopkBenchRow> rows;
    for (std::size_t n : sizes) {
        for (Distribution dist : distributions) {
            TopkBenchRow row;
            row.n = n;
            row.distribution = distribution_name(dist);
            const std::size_t k = std::min(config.k, n * n);

            const std::vector<double> x = generate_vector(n, config.seed, dist);
            const std::vector<double> y = generate_vector(n, config.seed + 1, dist);

            Timer approx_timer;
            const TopKResult forward = fast_topk(x, y, k, schedule, estimate);
            std::vector<double> y_rev(y.rbegin(), y.rend());
            const TopKResult reversed = fast_topk(x, y_rev, k, schedule, estimate);
            const std::vector<TopKItem> items = recover_indices(forward, reversed, x, y);
            row.approx_time_s = approx_timer.seconds();

            std::size_t verified = 0;
            for (const auto& item : items) verified += item.verified ? 1 : 0;
            row.verified_fraction =
                items.empty() ? 0.0 : static_cast<double>(verified) / static_cast<double>(items.size());

            if (n <= oracle_cutoff) {
                row.oracle_run = true;
                Timer oracle_timer;
                const auto oracle = naive_topk_sort(x, y, k);
                row.oracle_time_s = oracle_timer.seconds();

                std::set<std::pair<int, int>> oracle_pairs;
                for (const auto& [value, i, j] : oracle) oracle_pairs.insert({i, j});
                std::size_t correct = 0;
                double squared = 0.0;
                for (std::size_t rank = 0; rank < items.size(); ++rank) {
                    if (oracle_pairs.count({items[rank].i, items[rank].j})) ++correct;
                    const double diff = items[rank].log_value - std::get<0>(oracle[rank]);
                    squared += diff * diff;
                }
                row.index_accuracy =
                    items.empty() ? 0.0 : static_cast<double>(correct) / static_cast<double>(items.size());
                row.rank_mse = items.empty() ? 0.0 : squared / static_cast<double>(items.size());
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string bench_apsp_csv(const std::vector<ApspBenchRow>& rows) {
    std::ostringstream out;
    out << "n,oracle_time_s,approx_time_s,mse\n";
    for (const auto& row : rows) {
        out << row.n << ',' << format_double(row.oracle_time_s) << ','
            << format_double(row.approx_time_s) << ',' << format_double(row.mse) << '\n';
    }
    return out.str();
}

std::string bench_topk_csv(const std::vector<TopkBenchRow>& rows) {
    std::ostringstream out;
    out << "n,distribution,oracle_time_s,approx_time_s,index_accuracy,verified_fraction,rank_mse\n";
    for (const auto& row : rows) {
        out << row.n << ',' << row.distribution << ',';
        if (row.oracle_run) out << format_double(row.oracle_time_s);
        out << ',' << format_double(row.approx_time_s) << ',';
        if (row.oracle_run) out << format_double(row.index_accuracy);
        out << ',' << format_double(row.verified_fraction) << ',';
        if (row.oracle_run) out << format_double(row.rank_mse);
        out << '\n';
    }
    return out.str();
}

}  // namespace semiring
