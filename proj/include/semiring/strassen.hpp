#pragma once

#include "semiring/matrix.hpp"

namespace semiring {

/// Standard O(n^3) product on the ring (*, +), the correctness oracle for
/// strassen_matmul.
Matrix naive_standard_matmul(const Matrix& x, const Matrix& y);

/// Strassen's seven-product recursion. Inputs must be square and of equal
/// size; non-power-of-two sizes are zero-padded. Below leaf_size the naive
/// kernel takes over.
Matrix strassen_matmul(const Matrix& x, const Matrix& y, std::size_t leaf_size = 64);

}  // namespace semiring
