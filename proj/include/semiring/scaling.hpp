#pragma once

#include <span>
#include <vector>

namespace semiring {

/// Inputs rescaled into [0,1] with the removed maxima recorded, so that
/// moving to a p-norm ring can only underflow, never overflow.
struct ScaledProblem {
    std::vector<std::vector<double>> scaled;
    std::vector<double> factors;
};

/// Divides values by their maximum in place and returns that maximum.
/// Throws std::invalid_argument on a negative entry and std::domain_error
/// when every entry is zero (the scale is undefined).
double scale_to_unit(std::span<double> values);

/// Applies scale_to_unit to every input tensor.
ScaledProblem scale_inputs(const std::vector<std::vector<double>>& inputs);

}  // namespace semiring
