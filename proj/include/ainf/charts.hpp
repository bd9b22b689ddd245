#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ainf/configuration.hpp"
#include "ainf/quotient.hpp"
#include "ainf/validate.hpp"

namespace ainf {

/// Lambda_n = alpha_n + beta_n j with Lambda_n i conj(Lambda_n) = lambda_n.
/// alpha_n > 0 when lambda_{n,R} > 0, beta_n > 0 when lambda_{n,R} < 0.
std::pair<Complex, Complex> split_center(const ImHPoint& lambda);

struct CenterSplit {
    std::vector<Complex> alpha;
    std::vector<Complex> beta;
};

/// Splits lambda_1..lambda_count (count = 0: the truncation, or all centers
/// of a finite configuration). Throws NotChartAdmissible on lambda_{n,R} = 0.
CenterSplit split_centers(const Configuration& config, std::int64_t count = 0);

/// (|z_n|^2, |w_n|^2) at moment value zeta.
std::pair<double, double> moduli(const ImHPoint& lambda, const ImHPoint& zeta);
std::pair<double, double> moduli_from_moment(const Configuration& config, const ImHPoint& zeta, CenterIndex n);

/// Coordinates (z_n, w_n), n <= count, of a point over zeta with z_n >= 0
/// whenever it is nonzero.
TruncatedRepresentative representative(const Configuration& config, const ImHPoint& zeta, std::int64_t count);

/// A point of X(lambda)*: moment value zeta off the centers plus the fiber
/// phase theta (the argument of the base chart function where it is defined).
struct ManifoldPoint {
    ImHPoint zeta;
    double theta = 0.0;
};

/// phi(q) = prod (q - z)^{k(z)} * exp(P(q)) with P given by its coefficients.
class Multiplier {
public:
    Multiplier() = default;
    explicit Multiplier(IntegerDivisor divisor, std::vector<Complex> unit = {})
        : divisor_(std::move(divisor)), unit_(std::move(unit))
    {
    }

    const IntegerDivisor& divisor() const noexcept { return divisor_; }
    std::span<const Complex> unit() const noexcept { return unit_; }

    Complex operator()(Complex q) const;
    /// P(q)
    Complex log_unit(Complex q) const;

    friend Multiplier operator*(const Multiplier& a, const Multiplier& b);
    friend Multiplier operator/(const Multiplier& a, const Multiplier& b);

private:
    IntegerDivisor divisor_;
    std::vector<Complex> unit_;
};

struct ChartCoordinates {
    Complex p;
    Complex q;
};

/// The chart (f^{o,phi}, mu_C) on X(lambda)^s.
class Chart {
public:
    /// Throws WrongDivisor unless phi.divisor() = k_{o,s}.
    Chart(const Configuration& config, CombinatorialSection section, Multiplier phi, double eps = 1e-12);

    const Configuration& config() const noexcept { return config_; }
    const CombinatorialSection& section() const noexcept { return section_; }
    const Multiplier& multiplier() const noexcept { return phi_; }
    /// k_{o,s}
    const IntegerDivisor& divisor() const noexcept { return k_; }

    /// Throws NotOnSection when the point's class is not on the section.
    ChartCoordinates forward(const ManifoldPoint& x) const;
    ManifoldPoint inverse(const ChartCoordinates& pq) const;

    /// log |G^s|^2 at zeta, its error bound and its t-derivative 4 Phi.
    struct LogModulus {
        double value;
        double error_bound;
        double derivative;
    };
    LogModulus log_modulus(const ImHPoint& zeta) const;

private:
    struct Deviation {
        Complex z;
        double lower;  // value of the deviating gap's ends
        double upper;
    };

    double phase_correction(Complex q) const;

    Configuration config_;
    CombinatorialSection section_;
    Multiplier phi_;
    IntegerDivisor k_;
    std::vector<Deviation> deviations_;
    std::int64_t min_truncation_ = 0;
    double eps_;
};

/// Canonical multiplier prod (q - z)^{k(z)} for a divisor.
Multiplier canonical_multiplier(const IntegerDivisor& k);
/// k_{o,s} over the whole plane (working disk for the general family).
IntegerDivisor section_divisor(const Configuration& config, const CombinatorialSection& s);

Complex f_base(const Configuration& config, const ManifoldPoint& x, double eps = 1e-12);
Complex f_chart(const Configuration& config, const CombinatorialSection& s, const Multiplier& phi,
                const ManifoldPoint& x, double eps = 1e-12);
ChartCoordinates chart_forward(const Configuration& config, const CombinatorialSection& s, const Multiplier& phi,
                               const ManifoldPoint& x, double eps = 1e-12);
ManifoldPoint chart_inverse(const Configuration& config, const CombinatorialSection& s, const Multiplier& phi,
                            const ChartCoordinates& pq, double eps = 1e-12);

/// (p phi2(q)/phi1(q), q); OutsideOverlap when q is in the support of
/// div(phi2) - div(phi1).
ChartCoordinates transition(const Multiplier& phi1, const Multiplier& phi2, const ChartCoordinates& pq);

/// |det J / p' - 1/p| * |p| for the transition's complex Jacobian by
/// central differences: zero when dp/p ^ dq is preserved.
double symplectic_defect(const Multiplier& phi1, const Multiplier& phi2, const ChartCoordinates& pq, double h = 1e-5);

/// x g for g in C^x: phase rotates by arg g and the moment flows so that
/// log |g|^2 = 4 int Phi dt.
ManifoldPoint act(const Configuration& config, const ManifoldPoint& x, Complex g, double eps = 1e-12);

/// prod (1 + x_n) through a compensated sum of complex logarithms.
Complex stable_product(std::span<const Complex> x);

double normalize_angle(double theta);

}  // namespace ainf
