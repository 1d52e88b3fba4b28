#include "semiring/schedule.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace semiring {

namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

PStarSchedule build_p_schedule(int p_base_max, int r) {
    if (r != 1 && r != 2)
        throw std::invalid_argument("build_p_schedule: r must be 1 or 2");
    if (!is_power_of_two(p_base_max))
        throw std::invalid_argument("build_p_schedule: p_base_max must be a power of two, got " +
                                    std::to_string(p_base_max));
    if (p_base_max < 2 * r)
        throw std::invalid_argument("build_p_schedule: p_base_max must be >= 2r");

    PStarSchedule schedule;
    schedule.p_base_max = p_base_max;
    schedule.r = r;

    // Bases run up to p_base_max / (2r) so that the largest multiple hits the cap.
    for (int base = 1; base * 2 * r <= p_base_max; base *= 2) {
        for (int mult = 1; mult <= 2 * r; ++mult)
            schedule.exponents.push_back(base * mult);
    }
    std::sort(schedule.exponents.begin(), schedule.exponents.end());
    schedule.exponents.erase(std::unique(schedule.exponents.begin(), schedule.exponents.end()),
                             schedule.exponents.end());
    return schedule;
}

}  // namespace semiring
