#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

namespace ainf {

using Complex = std::complex<double>;

/// 1-based position of a center in the configuration's enumeration order.
using CenterIndex = std::int64_t;

/// A point of Im H written as (real part, complex part) along R i + C k,
/// i.e. zeta = t i - z k.
struct ImHPoint {
    double t = 0.0;
    Complex z{0.0, 0.0};

    bool finite() const noexcept
    {
        return std::isfinite(t) && std::isfinite(z.real()) && std::isfinite(z.imag());
    }

    double norm() const noexcept { return std::hypot(t, std::abs(z)); }

    friend ImHPoint operator+(const ImHPoint& a, const ImHPoint& b) noexcept
    {
        return {a.t + b.t, a.z + b.z};
    }
    friend ImHPoint operator-(const ImHPoint& a) noexcept { return {-a.t, -a.z}; }
    friend bool operator==(const ImHPoint& a, const ImHPoint& b) noexcept = default;
};

/// |zeta + lambda| computed without forming the sum's components twice.
inline double distance_to_negated(const ImHPoint& zeta, const ImHPoint& lambda) noexcept
{
    return std::hypot(zeta.t + lambda.t, std::abs(zeta.z + lambda.z));
}

/// Lexicographic order on (re, im), used to key fibers by their base point.
struct ComplexLess {
    bool operator()(const Complex& a, const Complex& b) const noexcept
    {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    }
};

/// A value together with an absolute bound on its error.
struct CertifiedValue {
    double value = 0.0;
    double error_bound = 0.0;

    bool contains(double x) const noexcept { return std::abs(x - value) <= error_bound; }
};

/// Shortest decimal that round-trips.
std::string format_double(double x);
std::string format_point(const ImHPoint& p);
std::string format_complex(Complex z);

}  // namespace ainf
