#include "semiring/problems.hpp"

#include <stdexcept>

#include "semiring/rng.hpp"

namespace semiring {

Matrix generate_apsp_problem(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("generate_apsp_problem: n must be >= 2");
    Rng rng(seed);
    Matrix weights(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) weights(i, j) = rng.uniform(1.0, 100.0);
    return weights;
}

Distribution parse_distribution(const std::string& name) {
    if (name == "uniform") return Distribution::Uniform;
    if (name == "normal") return Distribution::Normal;
    if (name == "exponential") return Distribution::Exponential;
    throw std::invalid_argument("unknown distribution: " + name);
}

std::string distribution_name(Distribution dist) {
    switch (dist) {
        case Distribution::Uniform: return "uniform";
        case Distribution::Normal: return "normal";
        case Distribution::Exponential: return "exponential";
    }
    return "unknown";
}

std::vector<double> generate_vector(std::size_t n, std::uint64_t seed, Distribution dist) {
    Rng rng(seed);
    std::vector<double> values(n);
    for (auto& v : values) {
        switch (dist) {
            case Distribution::Uniform: v = rng.uniform(); break;
            case Distribution::Normal: v = rng.normal(); break;
            case Distribution::Exponential: v = rng.exponential(); break;
        }
    }
    return values;
}

}  // namespace semiring
