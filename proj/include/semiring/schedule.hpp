#pragma once

#include <vector>

namespace semiring {

/// The ordered family P of exponents used by the p-norm ring trick.
///
/// Exponents are the union, over power-of-two bases b, of the multiples
/// {b, 2b, ..., 2r*b}, capped at p_base_max. Every base therefore carries
/// the full evenly spaced multiple set an order-r projection needs.
struct PStarSchedule {
    int p_base_max = 512;
    int r = 2;
    std::vector<int> exponents;  // strictly increasing, deduplicated
};

/// Builds the exponent family for a given cap and projection order.
/// p_base_max must be a power of two and at least 2r.
/// For r=2: |exponents| is 18 at p_base_max=512 and 24 at 4096.
PStarSchedule build_p_schedule(int p_base_max, int r);

}  // namespace semiring
