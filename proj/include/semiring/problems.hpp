#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semiring/matrix.hpp"

namespace semiring {

/// Complete-graph weight matrix with off-diagonal weights drawn uniformly
/// from [1, 100], diagonal zero. Deterministic per seed. n must be >= 2.
Matrix generate_apsp_problem(std::size_t n, std::uint64_t seed);

enum class Distribution { Uniform, Normal, Exponential };

Distribution parse_distribution(const std::string& name);  // throws on unknown name
std::string distribution_name(Distribution dist);

/// Seeded sample vector for the top-k benchmarks: Uniform is U[0,1),
/// Normal is standard normal, Exponential has rate 1.
std::vector<double> generate_vector(std::size_t n, std::uint64_t seed, Distribution dist);

}  // namespace semiring
