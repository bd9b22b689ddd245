#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ainf/configuration.hpp"

namespace ainf {

/// Phi(zeta) = 1/4 sum 1/|zeta + lambda_n| with |value - Phi| <= error_bound <= eps.
CertifiedValue phi(const Configuration& config, const ImHPoint& zeta, double eps);

/// Density of the 4-volume after integrating out the fiber (per unit fiber length).
CertifiedValue volume_density(const Configuration& config, const ImHPoint& zeta, double eps = 1e-10);

/// int_{from_t}^{to_t} Phi(t, z) dt by adaptive Gauss-Kronrod quadrature.
CertifiedValue flow_log_g(const Configuration& config, Complex z, double from_t, double to_t, double eps);

/// The same integral through the closed-form sum of logarithms,
/// 1/4 sum_n [log-ratio over I_+(zeta)] + [log-ratio over I_-(zeta)].
CertifiedValue F_lambda(const Configuration& config, double eta_t, double zeta_t, Complex z, double eps);

/// int_0^R sqrt(Phi(s u)) ds along the unit vector u = direction/|direction|
/// written as (t, Re z, Im z).
double radial_distance(const Configuration& config, const std::array<double, 3>& direction, double R);

struct GrowthFit {
    std::vector<double> rho;
    std::vector<double> W;
    /// (log rho, log W)
    std::vector<std::pair<double, double>> samples;
    double slope = 0.0;
    double slope_stderr = 0.0;
    double intercept = 0.0;
};

struct GrowthOptions {
    int directions = 257;
    int points_per_decade = 48;
    double r_min = 1e-3;
    double relative_accuracy = 1e-6;
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Monte Carlo estimate of W(rho) = 2 pi int_{dist <= rho} Phi d^3x for an
/// axial configuration, and the least squares slope of log W against log rho.
GrowthFit growth_exponent(const Configuration& config, std::span<const double> rho_grid, std::int64_t samples,
                          std::uint64_t seed, const GrowthOptions& options = {});

}  // namespace ainf
