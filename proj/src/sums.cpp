#include "sums.hpp"

#include <limits>

#include "ainf/error.hpp"

namespace ainf::detail {

bool is_singular(double distance, const ImHPoint& zeta, const ImHPoint& lambda) noexcept
{
    return distance <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(zeta.norm(), lambda.norm());
}

std::int64_t resolving_truncation(const Configuration& config, double radius, std::int64_t start)
{
    std::int64_t N = std::max<std::int64_t>(start, 1);
    const auto tails = config.tails();
    for (;;) {
        bool ok = true;
        for (std::size_t j = 0; j < tails.size() && ok; ++j)
            ok = series::resolves(tails[j], config.tail_start(j, N), radius + std::abs(tails[j].base));
        if (ok) return N;
        if (N >= max_truncation)
            fail(ErrorKind::TailUnresolved, "no truncation up to " + std::to_string(max_truncation) +
                                                " resolves the tail at radius " + std::to_string(radius));
        N *= 2;
    }
}

CertifiedValue inverse_distance_sum(const Configuration& config, const ImHPoint& zeta, std::int64_t N)
{
    series::Accumulator acc;
    for_each_head(config, N, [&](const ImHPoint& lambda) {
        const double d = distance_to_negated(zeta, lambda);
        if (is_singular(d, zeta, lambda))
            fail(ErrorKind::SingularPoint, "point " + format_point(zeta) + " is the center -" + format_point(lambda));
        acc.add(1.0 / d);
    });
    double value = acc.value();
    double err = acc.rounding_bound();
    const auto tails = config.tails();
    for (std::size_t j = 0; j < tails.size(); ++j) {
        const auto t = series::inverse_distance_tail(tails[j], config.tail_start(j, N), zeta);
        value += t.value;
        err += t.error_bound;
    }
    return {value, err};
}

double inverse_distance_lean(const Configuration& config, const ImHPoint& zeta, double rel)
{
    series::Accumulator acc;
    for (const auto& c : config.explicit_centers()) acc.add(1.0 / distance_to_negated(zeta, c));
    double total = acc.value();
    for (const auto& tail : config.tails()) {
        const Magnitude mag(tail);
        const double rho = series::tail_radius(tail, zeta.t, zeta.z);
        std::int64_t M = tail.first;
        const double need = 2.0 * rho / tail.scale;
        if (need > 1.0) M = std::max<std::int64_t>(M, static_cast<std::int64_t>(std::ceil(std::pow(need, 1.0 / tail.exponent))));
        // Crude bound of the second order remainder: rho^3 * 2 S(4p) / c^4
        // with S(s) <= M^{-s} + M^{1-s}/(s-1).
        const double s4 = 4.0 * tail.exponent;
        auto remainder = [&](std::int64_t m) {
            const double x = static_cast<double>(m);
            const double S = std::pow(x, -s4) + std::pow(x, 1.0 - s4) / (s4 - 1.0);
            return 2.0 * rho * rho * rho * S / std::pow(tail.scale, 4);
        };
        const double w2 = std::norm(zeta.z + tail.base);
        const double sign = tail.sign;
        double head = 0.0;
        std::int64_t m = tail.first;
        for (;;) {
            for (; m < M; ++m) {
                const double x = zeta.t + sign * mag(m);
                head += 1.0 / std::sqrt(x * x + w2);
            }
            if (remainder(M) <= rel * (total + head)) break;
            M = M + M / 4 + 1;
        }
        total += head + series::inverse_distance_tail(tail, M, zeta).value;
    }
    return total;
}

}  // namespace ainf::detail
