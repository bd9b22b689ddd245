#include <gtest/gtest.h>

#include <random>

#include "ainf/error.hpp"
#include "ainf/potential.hpp"
#include "ainf/quotient.hpp"
#include "oracles.hpp"

using namespace ainf;

namespace {

const Configuration single = Configuration::finite({{0.0, 0.0}});

ErrorKind error_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Phi, SingleCenter)
{
    EXPECT_EQ(phi(single, {1.0, 0.0}, 1e-12).value, 0.25);
    EXPECT_DOUBLE_EQ(phi(single, {3.0, 4.0}, 1e-12).value, 0.05);
    EXPECT_DOUBLE_EQ(volume_density(single, {3.0, 4.0}).value, 0.05);
}

TEST(Phi, PowerLawOrigin)
{
    const double exact = static_cast<double>(oracle::zeta2() / 4);
    const auto v = phi(Configuration::power_law(2.0), {0.0, 0.0}, 1e-10);
    EXPECT_LE(v.error_bound, 1e-10);
    EXPECT_NEAR(v.value, exact, 1e-10);
    EXPECT_LE(std::abs(v.value - exact), v.error_bound);
}

TEST(Phi, MatchesBruteForceOffAxis)
{
    // direct sum to 10^6 terms plus the integral tail estimate
    const ImHPoint zeta{2.5, {1.0, -3.0}};
    long double s = 0;
    const int M = 1000000;
    for (int n = M; n >= 1; --n) {
        const long double t = zeta.t + static_cast<long double>(n) * n;
        s += 1 / std::sqrt(t * t + std::norm(zeta.z));
    }
    s += 1.0L / M;  // int_M^inf dn / n^2
    const auto v = phi(Configuration::power_law(2.0), zeta, 1e-12);
    EXPECT_NEAR(v.value, static_cast<double>(s / 4), 1e-11);
}

TEST(Phi, Errors)
{
    const auto pl = Configuration::power_law(2.0);
    EXPECT_EQ(error_of([&] { (void)phi(pl, {-4.0, 0.0}, 1e-10); }), ErrorKind::SingularPoint);
    EXPECT_EQ(error_of([&] { (void)phi(single, {0.0, 0.0}, 1e-10); }), ErrorKind::SingularPoint);
}

TEST(Phi, Positive)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-50, 50);
    const auto c = Configuration::axial({-3.5, 0.25}, 1.0, 2.5);
    for (int i = 0; i < 100; ++i) EXPECT_GT(phi(c, {U(rng), {U(rng) / 10, U(rng) / 10}}, 1e-10).value, 0.0);
}

TEST(Flow, Trivial)
{
    EXPECT_EQ(flow_log_g(Configuration::power_law(2.0), 0.0, -2.0, -2.0, 1e-10).value, 0.0);
    EXPECT_EQ(F_lambda(Configuration::power_law(2.0), -2.0, -2.0, 0.0, 1e-10).value, 0.0);
}

TEST(Flow, AsinhLaw)
{
    const double exact = std::asinh(1.0) / 4;
    EXPECT_NEAR(flow_log_g(single, 1.0, 0.0, 1.0, 1e-12).value, exact, 1e-12);
    EXPECT_NEAR(F_lambda(single, 1.0, 0.0, 1.0, 1e-12).value, exact, 1e-15);
}

TEST(Flow, Additivity)
{
    const auto pl = Configuration::power_law(2.0);
    const double whole = flow_log_g(pl, 0.0, -0.5, 0.5, 1e-12).value;
    const double parts = flow_log_g(pl, 0.0, -0.5, 0.0, 1e-12).value + flow_log_g(pl, 0.0, 0.0, 0.5, 1e-12).value;
    EXPECT_NEAR(whole, parts, 1e-12);
}

TEST(Flow, ClosedFormAgreesInGap)
{
    const auto pl = Configuration::power_law(2.0);
    const auto a = flow_log_g(pl, 0.0, -2.5, -3.5, 1e-12);
    const auto b = F_lambda(pl, -3.5, -2.5, 0.0, 1e-12);
    EXPECT_NEAR(a.value, b.value, 1e-8);
    EXPECT_LE(std::abs(a.value - b.value), a.error_bound + b.error_bound);
}

TEST(Flow, SegmentHitsCenter)
{
    const auto pl = Configuration::power_law(2.0);
    EXPECT_EQ(error_of([&] { (void)flow_log_g(pl, 0.0, -0.5, -1.5, 1e-10); }), ErrorKind::SegmentHitsCenter);
    EXPECT_EQ(error_of([&] { (void)F_lambda(pl, -4.0, -3.0, 0.0, 1e-10); }), ErrorKind::SegmentHitsCenter);
}

TEST(Flow, SucceedsIffSameClass)
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> U(-30, 5);
    const auto pl = Configuration::power_law(2.0);
    for (int i = 0; i < 100; ++i) {
        const double a = U(rng), b = U(rng);
        const bool same = same_class(pl, {a, 0.0}, {b, 0.0});
        bool ok = true;
        try {
            (void)flow_log_g(pl, 0.0, a, b, 1e-10);
        } catch (const Error&) {
            ok = false;
        }
        EXPECT_EQ(ok, same) << a << " " << b;
    }
}

TEST(Flow, DerivativeIsPhi)
{
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> U(0, 1);
    const auto pl = Configuration::power_law(2.0);
    for (int i = 0; i < 50; ++i) {
        const Complex q(4 * U(rng) - 2, 4 * U(rng) - 2);
        const double base = 20 * U(rng) - 10, m = 20 * U(rng) - 10, h = 1e-4;
        const double d = (F_lambda(pl, m + h, base, q, 1e-13).value - F_lambda(pl, m - h, base, q, 1e-13).value) / (2 * h);
        const double p = phi(pl, {m, q}, 1e-13).value;
        EXPECT_NEAR(d / p, 1.0, 1e-6);
    }
}

TEST(RadialDistance, SingleCenter)
{
    EXPECT_EQ(radial_distance(single, {1, 0, 0}, 0.0), 0.0);
    for (double R : {1e-2, 1.0, 49.0, 1e4}) {
        EXPECT_NEAR(radial_distance(single, {0.3, 0.4, -0.2}, R), std::sqrt(R), 1e-9 * std::sqrt(R));
    }
}

TEST(RadialDistance, MonotoneAndRayErrors)
{
    const auto pl = Configuration::power_law(2.0);
    double prev = 0;
    for (double R : {1.0, 10.0, 50.0, 100.0}) {
        const double d = radial_distance(pl, {0, 1, 0}, R);
        EXPECT_GT(d, prev);
        prev = d;
    }
    EXPECT_EQ(error_of([&] { (void)radial_distance(pl, {-1, 0, 0}, 10.0); }), ErrorKind::RayHitsCenter);
}

TEST(Growth, Errors)
{
    const std::vector<double> narrow{100, 200, 400}, ok{100, 1000, 10000};
    EXPECT_EQ(error_of([&] { (void)growth_exponent(single, narrow, 1000, 1); }), ErrorKind::InsufficientRange);
    EXPECT_EQ(error_of([&] { (void)growth_exponent(Configuration::finite({{1, {1, 0}}}), ok, 1000, 1); }),
              ErrorKind::NotAxial);
}

TEST(Growth, DeterministicForSeed)
{
    std::vector<double> grid;
    for (int i = 0; i <= 8; ++i) grid.push_back(100 * std::pow(10.0, i / 4.0));
    GrowthOptions one, many;
    one.threads = 1;
    many.threads = 4;
    const auto a = growth_exponent(single, grid, 20000, 42, one);
    const auto b = growth_exponent(single, grid, 20000, 42, many);
    EXPECT_EQ(a.W, b.W);
    EXPECT_EQ(a.slope, b.slope);
    for (std::size_t i = 1; i < a.samples.size(); ++i) EXPECT_GT(a.samples[i].first, a.samples[i - 1].first);
}

TEST(Growth, SingleCenterClosedForm)
{
    // rho = sqrt(r): W(rho) = 2 pi * int_{r <= rho^2} 1/(4 r) d^3x = pi^2 rho^4
    std::vector<double> grid{100, 300, 1000, 3000, 10000};
    const auto fit = growth_exponent(single, grid, 1000000, 7);
    for (std::size_t i = 0; i < grid.size(); ++i)
        EXPECT_NEAR(fit.W[i] / (std::numbers::pi * std::numbers::pi * std::pow(grid[i], 4)), 1.0, 0.02);
    EXPECT_NEAR(fit.slope, 4.0, 0.05);
}
