#include "ainf/potential.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <limits>

#include "ainf/error.hpp"
#include "ainf/fiber.hpp"
#include "sums.hpp"

namespace ainf {

namespace {

using boost::math::quadrature::gauss_kronrod;

constexpr double u = std::numeric_limits<double>::epsilon() / 2;

std::int64_t start_truncation(const Configuration& config, double radius)
{
    if (config.is_finite()) return config.explicit_count();
    return detail::resolving_truncation(config, radius, config.truncation());
}

void require_clear_segment(const Configuration& config, Complex z, double a, double b)
{
    const FiberView view(config, z);
    const double lo = std::min(a, b), hi = std::max(a, b);
    if (view.count_in(lo, hi) > 0) {
        const auto p = view.next_above(std::nextafter(lo, -INFINITY));
        fail(ErrorKind::SegmentHitsCenter, "segment [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                               "] over " + format_complex(z) + " contains the fiber point of center " +
                                               std::to_string(p ? p->n : 0));
    }
}

/// Explicit part of sum 1/D for n <= N, without tails.
double head_inverse_distance(const Configuration& config, const ImHPoint& zeta, std::int64_t N)
{
    series::Accumulator acc;
    detail::for_each_head(config, N, [&](const ImHPoint& lambda) { acc.add(1.0 / distance_to_negated(zeta, lambda)); });
    return acc.value();
}

}  // namespace

CertifiedValue phi(const Configuration& config, const ImHPoint& zeta, double eps)
{
    if (!(eps > 0)) fail(ErrorKind::InvalidArgument, "eps must be positive");
    if (!zeta.finite()) fail(ErrorKind::InvalidArgument, "point is not finite");
    std::int64_t N = start_truncation(config, zeta.norm());
    for (;;) {
        const auto s = detail::inverse_distance_sum(config, zeta, N);
        const CertifiedValue out{0.25 * s.value, 0.25 * s.error_bound};
        if (out.error_bound <= eps) return out;
        if (config.is_finite() || N >= detail::max_truncation)
            fail(ErrorKind::TailUnresolved, "error bound " + std::to_string(out.error_bound) + " exceeds eps");
        N *= 2;
    }
}

CertifiedValue volume_density(const Configuration& config, const ImHPoint& zeta, double eps)
{
    return phi(config, zeta, eps);
}

CertifiedValue flow_log_g(const Configuration& config, Complex z, double from_t, double to_t, double eps)
{
    if (!(eps > 0)) fail(ErrorKind::InvalidArgument, "eps must be positive");
    if (from_t == to_t) return {0.0, 0.0};
    require_clear_segment(config, z, from_t, to_t);
    const double radius = std::max(ImHPoint{from_t, z}.norm(), ImHPoint{to_t, z}.norm());
    std::int64_t N = start_truncation(config, radius);
    for (;;) {
        double quad_err = 0.0, l1 = 0.0;
        auto f = [&](double t) { return head_inverse_distance(config, {t, z}, N); };
        const double head = gauss_kronrod<double, 15>::integrate(f, from_t, to_t, 30, 1e-13, &quad_err, &l1);
        double value = head;
        double err = quad_err + 16 * u * l1;
        const auto tails = config.tails();
        for (std::size_t j = 0; j < tails.size(); ++j) {
            const auto t = series::inverse_distance_integral_tail(tails[j], config.tail_start(j, N), from_t, to_t, z);
            value += t.value;
            err += t.error_bound;
        }
        const CertifiedValue out{0.25 * value, 0.25 * err};
        if (out.error_bound <= eps) return out;
        if (config.is_finite() || N >= detail::max_truncation || 0.25 * quad_err > eps / 2)
            fail(ErrorKind::TailUnresolved, "flow error bound " + std::to_string(out.error_bound) + " exceeds eps");
        N *= 2;
    }
}

CertifiedValue F_lambda(const Configuration& config, double eta_t, double zeta_t, Complex z, double eps)
{
    if (!(eps > 0)) fail(ErrorKind::InvalidArgument, "eps must be positive");
    if (eta_t == zeta_t) return {0.0, 0.0};
    require_clear_segment(config, z, zeta_t, eta_t);
    const double radius = std::max(ImHPoint{eta_t, z}.norm(), ImHPoint{zeta_t, z}.norm());
    std::int64_t N = start_truncation(config, radius);
    const double h = eta_t - zeta_t;
    for (;;) {
        series::Accumulator acc;
        detail::for_each_head(config, N, [&](const ImHPoint& lambda) {
            const double w2 = std::norm(z + lambda.z);
            const double xz = zeta_t + lambda.t;
            const double xe = eta_t + lambda.t;
            const double dz = std::sqrt(xz * xz + w2);
            const double de = std::sqrt(xe * xe + w2);
            double term;
            if (xz >= 0 && xe >= 0) {
                // n in I_+: log((D_eta + x_eta) / (D_zeta + x_zeta))
                term = std::log1p(h * (1.0 + (xe + xz) / (de + dz)) / (dz + xz));
            } else if (xz < 0 && xe < 0) {
                // n in I_-: log((D_zeta - x_zeta) / (D_eta - x_eta))
                term = -std::log1p(-h * (1.0 - (xe + xz) / (de + dz)) / (dz - xz));
            } else {
                // x changes sign along the segment (possible only off the fiber line)
                auto plus = [&](double x, double d) { return x >= 0 ? d + x : w2 / (d - x); };
                term = std::log(plus(xe, de) / plus(xz, dz));
            }
            acc.add(term);
        });
        double value = acc.value();
        double err = acc.rounding_bound() + 64 * u * std::abs(value);
        const auto tails = config.tails();
        for (std::size_t j = 0; j < tails.size(); ++j) {
            const auto t = series::inverse_distance_integral_tail(tails[j], config.tail_start(j, N), zeta_t, eta_t, z);
            value += t.value;
            err += t.error_bound;
        }
        const CertifiedValue out{0.25 * value, 0.25 * err};
        if (out.error_bound <= eps) return out;
        if (config.is_finite() || N >= detail::max_truncation)
            fail(ErrorKind::TailUnresolved, "F_lambda error bound " + std::to_string(out.error_bound) + " exceeds eps");
        N *= 2;
    }
}

double radial_distance(const Configuration& config, const std::array<double, 3>& direction, double R)
{
    const double len = std::hypot(direction[0], direction[1], direction[2]);
    if (!(len > 0) || !std::isfinite(len)) fail(ErrorKind::InvalidArgument, "direction must be a nonzero vector");
    if (!(R >= 0) || !std::isfinite(R)) fail(ErrorKind::InvalidArgument, "R must be a finite nonnegative real");
    if (R == 0) return 0.0;
    const ImHPoint dir{direction[0] / len, Complex(direction[1] / len, direction[2] / len)};

    auto on_ray = [&](const ImHPoint& p) {
        const double s = p.t * dir.t + p.z.real() * dir.z.real() + p.z.imag() * dir.z.imag();
        const ImHPoint off{p.t - s * dir.t, p.z - s * dir.z};
        return s > 0 && s <= R && off.norm() <= 1e-12 * std::max(1.0, p.norm());
    };
    for (std::size_t i = 0; i < config.explicit_centers().size(); ++i)
        if (on_ray(-config.explicit_centers()[i]))
            fail(ErrorKind::RayHitsCenter, "ray meets center " + std::to_string(i + 1));
    const auto tails = config.tails();
    for (std::size_t j = 0; j < tails.size(); ++j) {
        const auto& tail = tails[j];
        // the tail's singular points are (-sign a_m, -base)
        double s;
        if (tail.base == Complex(0.0, 0.0)) {
            if (std::abs(dir.z) > 1e-15 || dir.t * -tail.sign <= 0) continue;
            s = tail.magnitude(tail.first);
            if (s <= R) fail(ErrorKind::RayHitsCenter, "ray runs along the fiber of tail " + std::to_string(j));
            continue;
        }
        if (std::abs(dir.z) == 0) continue;
        s = std::abs(tail.base) / std::abs(dir.z);
        if (std::abs(-tail.base - s * dir.z) > 1e-12 * std::abs(tail.base) || s > R) continue;
        const double a = -tail.sign * s * dir.t;
        if (a <= 0) continue;
        const double m = std::round(std::pow(a / tail.scale, 1.0 / tail.exponent));
        if (m >= static_cast<double>(tail.first) && std::abs(tail.magnitude(static_cast<std::int64_t>(m)) - a) <= 1e-12 * a)
            fail(ErrorKind::RayHitsCenter, "ray meets a center of tail " + std::to_string(j));
    }

    const std::int64_t N = start_truncation(config, R);
    // s = v^2 removes the 1/sqrt(s) behaviour of a center at the origin
    auto f = [&](double v) {
        const ImHPoint p{v * v * dir.t, v * v * dir.z};
        const auto s = detail::inverse_distance_sum(config, p, N);
        return 2.0 * v * std::sqrt(0.25 * s.value);
    };
    return gauss_kronrod<double, 15>::integrate(f, 0.0, std::sqrt(R), 30, 1e-12);
}

}  // namespace ainf
