#include "ainf/series.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

#include <limits>
#include <mutex>

#include "ainf/error.hpp"

namespace ainf::series {

namespace {

void disable_gsl_abort()
{
    static std::once_flag once;
    std::call_once(once, [] { gsl_set_error_handler_off(); });
}

struct Powers {
    CertifiedValue s1, s2, s3, s4;  // S(p), S(2p), S(3p), S(4p)
    double a_first;                 // scale * first^p
};

Powers powers(const PowerTail& tail, std::int64_t first, int orders)
{
    Powers out{};
    out.s1 = power_sum(tail.exponent, first);
    if (orders >= 2) out.s2 = power_sum(2 * tail.exponent, first);
    if (orders >= 3) out.s3 = power_sum(3 * tail.exponent, first);
    if (orders >= 4) out.s4 = power_sum(4 * tail.exponent, first);
    out.a_first = tail.magnitude(first);
    return out;
}

void require_resolved(const PowerTail& tail, std::int64_t first, double rho)
{
    if (!resolves(tail, first, rho))
        fail(ErrorKind::TailUnresolved, "tail expansion needs scale*m^p >= 2*rho (m=" + std::to_string(first) +
                                            ", rho=" + std::to_string(rho) + ")");
}

}  // namespace

CertifiedValue power_sum(double s, std::int64_t first)
{
    if (!(s > 1.0) || first < 1) fail(ErrorKind::InvalidArgument, "power_sum needs s > 1 and first >= 1");
    disable_gsl_abort();
    gsl_sf_result r;
    const int status = gsl_sf_hzeta_e(s, static_cast<double>(first), &r);
    if (status == GSL_EUNDRFLW || (status == GSL_SUCCESS && r.val == 0.0)) return {0.0, std::numeric_limits<double>::min()};
    if (status != GSL_SUCCESS)
        fail(ErrorKind::TailUnresolved, std::string("hurwitz zeta failed: ") + gsl_strerror(status));
    return {r.val, 2.0 * r.err + 4.0 * std::numeric_limits<double>::epsilon() * r.val};
}

bool resolves(const PowerTail& tail, std::int64_t m, double rho)
{
    return tail.magnitude(m) >= 2.0 * rho;
}

double tail_radius(const PowerTail& tail, double t, Complex q)
{
    return std::hypot(t, std::abs(q + tail.base));
}

CertifiedValue inverse_distance_tail(const PowerTail& tail, std::int64_t first, const ImHPoint& zeta)
{
    const double rho = tail_radius(tail, zeta.t, zeta.z);
    require_resolved(tail, first, rho);
    const auto P = powers(tail, first, 4);
    const double c = tail.scale;
    const double t = zeta.t;
    const double k1 = 1.0 / c;
    const double k2 = -tail.sign * t / (c * c);
    const double k3 = (3.0 * t * t - rho * rho) / (2.0 * c * c * c);
    const double value = k1 * P.s1.value + k2 * P.s2.value + k3 * P.s3.value;
    const double c4 = c * c * c * c;
    double err = rho * rho * rho * (P.s4.value + P.s4.error_bound) / (c4 * (1.0 - rho / P.a_first));
    err += std::abs(k1) * P.s1.error_bound + std::abs(k2) * P.s2.error_bound + std::abs(k3) * P.s3.error_bound;
    err += 4.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
    return {value, err};
}

CertifiedValue inverse_distance_integral_tail(const PowerTail& tail, std::int64_t first, double t0, double t1,
                                              Complex q)
{
    if (t0 == t1) return {0.0, 0.0};
    const double rho = std::max(tail_radius(tail, t0, q), tail_radius(tail, t1, q));
    require_resolved(tail, first, rho);
    const auto P = powers(tail, first, 4);
    const double c = tail.scale;
    const double w2 = std::norm(q + tail.base);
    const double k1 = (t1 - t0) / c;
    const double k2 = -tail.sign * (t1 * t1 - t0 * t0) / (2.0 * c * c);
    const double k3 = ((t1 * t1 * t1 - t0 * t0 * t0) / 3.0 - w2 * (t1 - t0) / 2.0) / (c * c * c);
    const double value = k1 * P.s1.value + k2 * P.s2.value + k3 * P.s3.value;
    const double c4 = c * c * c * c;
    double err = std::abs(t1 - t0) * rho * rho * rho * (P.s4.value + P.s4.error_bound) /
                 (c4 * (1.0 - rho / P.a_first));
    err += std::abs(k1) * P.s1.error_bound + std::abs(k2) * P.s2.error_bound + std::abs(k3) * P.s3.error_bound;
    err += 4.0 * std::numeric_limits<double>::epsilon() * (std::abs(k1 * P.s1.value) + std::abs(k2 * P.s2.value) +
                                                          std::abs(k3 * P.s3.value));
    return {value, err};
}

CertifiedValue log_modulus_tail(const PowerTail& tail, std::int64_t first, Complex q)
{
    const double w0 = std::abs(tail.base);
    const double w1 = std::abs(q + tail.base);
    if (w0 == w1) return {0.0, 0.0};
    require_resolved(tail, first, std::max(w0, w1));
    const auto P = powers(tail, first, 4);
    const double c = tail.scale;
    const double d = (w1 - w0) * (w1 + w0);
    const double k2 = tail.sign * d / (4.0 * c * c);
    const double value = k2 * P.s2.value;
    const double m = w0 * w0 + w1 * w1;
    double err = 3.0 * m * m * (P.s4.value + P.s4.error_bound) / (16.0 * c * c * c * c);
    err += std::abs(k2) * P.s2.error_bound + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
    return {value, err};
}

CertifiedValue reciprocal_tail(const PowerTail& tail, std::int64_t first)
{
    if (tail.magnitude(first) < 1.0)
        fail(ErrorKind::TailUnresolved, "reciprocal tail bound needs scale*m^p >= 1");
    const auto P = powers(tail, first, 4);
    const double c = tail.scale;
    const double upper = P.s1.value / c - P.s2.value / (c * c) + P.s3.value / (c * c * c) +
                         P.s1.error_bound / c + P.s2.error_bound / (c * c) + P.s3.error_bound / (c * c * c);
    // The alternating expansion of 1/(1+a) brackets the true value between
    // consecutive partial sums; the width is the next term.
    const double width = P.s3.value / (c * c * c) + P.s1.error_bound / c + P.s2.error_bound / (c * c) +
                         P.s3.error_bound / (c * c * c);
    return {upper * (1.0 + 4.0 * std::numeric_limits<double>::epsilon()), width};
}

}  // namespace ainf::series
