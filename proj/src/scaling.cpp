#include "semiring/scaling.hpp"

#include <algorithm>
#include <stdexcept>

namespace semiring {

double scale_to_unit(std::span<double> values) {
    double max = 0.0;
    for (double v : values) {
        if (v < 0.0) throw std::invalid_argument("scale_to_unit: negative entry");
        max = std::max(max, v);
    }
    if (max == 0.0) throw std::domain_error("scale_to_unit: all entries zero, scale undefined");
    for (double& v : values) v /= max;
    return max;
}

ScaledProblem scale_inputs(const std::vector<std::vector<double>>& inputs) {
    ScaledProblem problem;
    problem.scaled = inputs;
    problem.factors.reserve(inputs.size());
    for (auto& tensor : problem.scaled) problem.factors.push_back(scale_to_unit(tensor));
    return problem;
}

}  // namespace semiring
