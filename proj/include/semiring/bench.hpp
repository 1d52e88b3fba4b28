#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semiring/estimate.hpp"
#include "semiring/matrix.hpp"
#include "semiring/problems.hpp"
#include "semiring/schedule.hpp"

namespace semiring {

/// Shared knobs for CLI commands and benchmark harnesses; defaults mirror
/// p_base_max=512, r=2, tau=1e-12 with no bias correction.
struct RunConfig {
    int p_base_max = 512;
    int r = 2;
    double tau = kDefaultTau;
    std::uint64_t seed = 1;
    std::size_t k = 10;
    bool bias_correct = false;
    std::string format = "table";  // table | csv | json
};

PStarSchedule schedule_for(const RunConfig& config);
EstimateConfig estimate_config_for(const RunConfig& config);

struct ApspBenchRow {
    std::size_t n = 0;
    double oracle_time_s = 0.0;
    double approx_time_s = 0.0;
    double mse = 0.0;
};

struct TopkBenchRow {
    std::size_t n = 0;
    std::string distribution;
    bool oracle_run = false;
    double oracle_time_s = 0.0;
    double approx_time_s = 0.0;
    double index_accuracy = 0.0;   // valid only when oracle_run
    double rank_mse = 0.0;         // valid only when oracle_run
    double verified_fraction = 0.0;
};

/// Per problem size: `replicates` seeded complete graphs, mean Floyd-Warshall
/// time, mean approximation time, and mean MSE between the two distance
/// matrices. Replicate r of size n uses seed config.seed + r.
std::vector<ApspBenchRow> bench_apsp(const std::vector<std::size_t>& sizes, int replicates,
                                     const RunConfig& config);

/// Per (size, distribution): one seeded problem; index-recovery accuracy and
/// per-rank squared error against the naive oracle. The oracle is skipped
/// (columns left empty) when n exceeds oracle_cutoff.
std::vector<TopkBenchRow> bench_topk(const std::vector<std::size_t>& sizes,
                                     const std::vector<Distribution>& distributions,
                                     const RunConfig& config, std::size_t oracle_cutoff);

/// Mean squared difference over all cells; pairs that are both infinite
/// contribute zero, a mismatched infinity yields an infinite MSE.
double matrix_mse(const Matrix& a, const Matrix& b);

double median(std::vector<double> values);

std::string bench_apsp_csv(const std::vector<ApspBenchRow>& rows);
std::string bench_topk_csv(const std::vector<TopkBenchRow>& rows);

}  // namespace semiring
