#pragma once

// Truncated sums over centers shared by the potential and chart code.

#include <cstdint>

#include "ainf/configuration.hpp"
#include "ainf/series.hpp"

namespace ainf::detail {

inline constexpr std::int64_t max_truncation = std::int64_t{1} << 26;

/// Fast lambda_m magnitude for the inner loops (integer exponents avoid pow).
struct Magnitude {
    double scale;
    double exponent;
    int integer_exponent;

    explicit Magnitude(const PowerTail& tail)
        : scale(tail.scale), exponent(tail.exponent),
          integer_exponent(tail.exponent == std::floor(tail.exponent) && tail.exponent <= 8 ? static_cast<int>(tail.exponent) : 0)
    {
    }

    double operator()(std::int64_t m) const noexcept
    {
        const double x = static_cast<double>(m);
        if (integer_exponent > 0) {
            double r = x;
            for (int k = 1; k < integer_exponent; ++k) r *= x;
            return scale * r;
        }
        return scale * std::pow(x, exponent);
    }
};

/// Smallest N >= start reached by doubling such that every tail expansion is
/// valid for points with |zeta| <= radius.
std::int64_t resolving_truncation(const Configuration& config, double radius, std::int64_t start);

/// Visits lambda_n for n <= N together with the tail starts M_j = tail_start(j, N).
template <class Visit>
void for_each_head(const Configuration& config, std::int64_t N, Visit&& visit)
{
    for (const auto& c : config.explicit_centers().first(static_cast<std::size_t>(std::min<std::int64_t>(N, config.explicit_count()))))
        visit(c);
    const auto tails = config.tails();
    for (std::size_t j = 0; j < tails.size(); ++j) {
        const Magnitude mag(tails[j]);
        const std::int64_t end = config.tail_start(j, N);
        const double sign = tails[j].sign;
        for (std::int64_t m = tails[j].first; m < end; ++m) visit(ImHPoint{sign * mag(m), tails[j].base});
    }
}

/// sum 1/|zeta + lambda_n| (that is 4 Phi) using n <= N explicitly and the
/// analytic tail beyond. Throws SingularPoint when zeta is a center.
CertifiedValue inverse_distance_sum(const Configuration& config, const ImHPoint& zeta, std::int64_t N);

/// Same sum with the truncation picked per tail for relative accuracy `rel`.
double inverse_distance_lean(const Configuration& config, const ImHPoint& zeta, double rel);

bool is_singular(double distance, const ImHPoint& zeta, const ImHPoint& lambda) noexcept;

}  // namespace ainf::detail
