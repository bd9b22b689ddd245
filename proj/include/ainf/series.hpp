#pragma once

#include <cstdint>

#include "ainf/configuration.hpp"
#include "ainf/types.hpp"

namespace ainf::series {

/// sum_{m >= first} m^{-s} for s > 1 (Hurwitz zeta).
CertifiedValue power_sum(double s, std::int64_t first);

/// Compensated (Neumaier) accumulator that also tracks sum |x_i| for a
/// rounding bound.
class Accumulator {
public:
    void add(double x) noexcept
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
        magnitude_ += std::abs(x);
    }
    double value() const noexcept { return sum_ + carry_; }
    double magnitude() const noexcept { return magnitude_; }
    /// Generous bound covering summation and a few ulps per term.
    double rounding_bound() const noexcept { return 8.0 * 1.1102230246251565e-16 * magnitude_ + 1e-300; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
    double magnitude_ = 0.0;
};

/// Distance scale that a point must stay below for tail expansions of
/// `tail` starting at term m to be valid: scale * m^exponent >= 2 rho.
bool resolves(const PowerTail& tail, std::int64_t m, double rho);

/// rho = |(t, q + base)|: distance from the point to the tail's axis origin.
double tail_radius(const PowerTail& tail, double t, Complex q);

/// sum_{m >= first} 1/|zeta + lambda_m| over the tail's terms from `first`
/// on, via the second order Legendre expansion.
CertifiedValue inverse_distance_tail(const PowerTail& tail, std::int64_t first, const ImHPoint& zeta);

/// int_{t0}^{t1} sum_{m >= first} 1/|(t, q) + lambda_m| dt.
CertifiedValue inverse_distance_integral_tail(const PowerTail& tail, std::int64_t first, double t0, double t1,
                                              Complex q);

/// sum_{m >= first} sigma log1p(Delta_m / (|lambda_m| + sigma lambda_{m,R})) at the point (0, q);
/// the per-center log modulus of the base chart function along the tail.
CertifiedValue log_modulus_tail(const PowerTail& tail, std::int64_t first, Complex q);

/// Upper bound for sum_{m >= first} 1/(1 + |lambda_m|); error_bound is the
/// width of the enclosure below the returned value.
CertifiedValue reciprocal_tail(const PowerTail& tail, std::int64_t first);

}  // namespace ainf::series
