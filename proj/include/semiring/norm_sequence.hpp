#pragma once

#include <span>
#include <vector>

#include "semiring/schedule.hpp"

namespace semiring {

/// Default underflow threshold: norm powers below tau are treated as
/// numerically destroyed and excluded from estimation.
inline constexpr double kDefaultTau = 1e-12;

struct NormPower {
    int p;     // exponent
    double s;  // ||u||_p^p of the implicit nonnegative vector u
};

/// The per-index curve (p, ||u||_p^p) from which maxima are estimated.
/// Entries are kept sorted by p ascending; only entries with s >= tau
/// participate in estimation.
class NormPowerSequence {
public:
    NormPowerSequence() = default;
    explicit NormPowerSequence(double tau) : tau_(tau) {}

    /// Appends an entry. Exponents must be added in strictly increasing order.
    void add(int p, double s);

    void clear() { entries_.clear(); }

    double tau() const { return tau_; }
    void set_tau(double tau) { tau_ = tau; }

    std::span<const NormPower> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    bool stable(double s) const { return s >= tau_; }

    /// Returns the norm power at exponent p, or nullptr if p is not present.
    const double* find(int p) const;

    /// Subtracts v from every entry, clamping at zero.
    void subtract_clamped(std::span<const double> values);

    std::vector<NormPower>& mutable_entries() { return entries_; }

private:
    std::vector<NormPower> entries_;
    double tau_ = kDefaultTau;
};

/// x^n for integer n >= 0 by binary exponentiation.
double ipow(double x, int n);

/// Directly computed norm powers of u over the schedule's exponents.
/// This is the exact (oracle-grade) route; ring algorithms produce the
/// same sequence through fast convolution or matrix multiplication.
NormPowerSequence exact_norm_powers(std::span<const double> u, const PStarSchedule& schedule,
                                    double tau = kDefaultTau);

}  // namespace semiring
