#include "semiring/norm_sequence.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace semiring {

void NormPowerSequence::add(int p, double s) {
    assert(entries_.empty() || entries_.back().p < p);
    entries_.push_back({p, s});
}

const double* NormPowerSequence::find(int p) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                               [](const NormPower& e, int key) { return e.p < key; });
    if (it == entries_.end() || it->p != p) return nullptr;
    return &it->s;
}

void NormPowerSequence::subtract_clamped(std::span<const double> values) {
    assert(values.size() == entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i].s = std::max(0.0, entries_[i].s - values[i]);
}

double ipow(double x, int n) {
    double result = 1.0;
    double base = x;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

NormPowerSequence exact_norm_powers(std::span<const double> u, const PStarSchedule& schedule,
                                    double tau) {
    for (double v : u)
        if (v < 0.0) throw std::invalid_argument("exact_norm_powers: negative entry");
    NormPowerSequence seq(tau);
    for (int p : schedule.exponents) {
        double s = 0.0;
        for (double v : u) s += ipow(v, p);
        seq.add(p, s);
    }
    return seq;
}

}  // namespace semiring
