#include "ainf/charts.hpp"

#include <limits>
#include <numbers>

#include "ainf/error.hpp"
#include "ainf/fiber.hpp"
#include "ainf/potential.hpp"
#include "ainf/series.hpp"
#include "roots.hpp"
#include "sums.hpp"

namespace ainf {

namespace {

constexpr double ln2 = std::numbers::ln2;
constexpr double u = std::numeric_limits<double>::epsilon() / 2;

double disk_of(const Configuration& config)
{
    return config.family() == Family::GeneralAxialFibered ? config.working_radius()
                                                          : std::numeric_limits<double>::infinity();
}

void require_admissible(const Configuration& config)
{
    const auto centers = config.explicit_centers();
    for (std::size_t i = 0; i < centers.size(); ++i)
        if (centers[i].t == 0.0)
            fail(ErrorKind::NotChartAdmissible, "lambda_" + std::to_string(i + 1) + " has zero real part");
}

/// D + x and D - x computed without cancellation.
struct Local {
    double x, w2, d, zplus, zminus, norm_lambda;
};

Local local(const ImHPoint& lambda, const ImHPoint& zeta)
{
    Local l;
    l.x = zeta.t + lambda.t;
    l.w2 = std::norm(zeta.z + lambda.z);
    l.d = std::sqrt(l.x * l.x + l.w2);
    l.zplus = l.x >= 0 ? l.d + l.x : l.w2 / (l.d - l.x);
    l.zminus = l.x <= 0 ? l.d - l.x : l.w2 / (l.d + l.x);
    l.norm_lambda = std::hypot(lambda.t, std::abs(lambda.z));
    return l;
}

}  // namespace

std::pair<Complex, Complex> split_center(const ImHPoint& lambda)
{
    if (lambda.t == 0.0) fail(ErrorKind::NotChartAdmissible, "lambda_R = 0 at " + format_point(lambda));
    const double norm = std::hypot(lambda.t, std::abs(lambda.z));
    if (lambda.t > 0) {
        const double alpha = std::sqrt((norm + lambda.t) / 2);
        return {alpha, lambda.z / (2.0 * alpha)};
    }
    const double beta = std::sqrt((norm - lambda.t) / 2);
    return {lambda.z / (2.0 * beta), beta};
}

CenterSplit split_centers(const Configuration& config, std::int64_t count)
{
    if (count <= 0) count = config.is_finite() ? config.explicit_count() : config.truncation();
    CenterSplit out;
    out.alpha.reserve(static_cast<std::size_t>(count));
    out.beta.reserve(static_cast<std::size_t>(count));
    for (CenterIndex n = 1; n <= count; ++n) {
        const auto [a, b] = split_center(config.center(n));
        out.alpha.push_back(a);
        out.beta.push_back(b);
    }
    return out;
}

std::pair<double, double> moduli(const ImHPoint& lambda, const ImHPoint& zeta)
{
    const Local l = local(lambda, zeta);
    return {l.zplus / 2, l.zminus / 2};
}

std::pair<double, double> moduli_from_moment(const Configuration& config, const ImHPoint& zeta, CenterIndex n)
{
    return moduli(config.center(n), zeta);
}

TruncatedRepresentative representative(const Configuration& config, const ImHPoint& zeta, std::int64_t count)
{
    TruncatedRepresentative rep{config, {}};
    for (CenterIndex n = 1; n <= count; ++n) {
        const ImHPoint lambda = config.center(n);
        const auto [zz, ww] = moduli(lambda, zeta);
        const Complex product = (zeta.z + lambda.z) / 2.0;  // z_n w_n
        const double z = std::sqrt(zz);
        if (z > 0)
            rep.entries.emplace_back(z, product / z);
        else
            rep.entries.emplace_back(0.0, std::sqrt(ww));
    }
    return rep;
}

Complex Multiplier::log_unit(Complex q) const
{
    Complex acc{0.0, 0.0};
    for (auto it = unit_.rbegin(); it != unit_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

Complex Multiplier::operator()(Complex q) const
{
    Complex value = std::exp(log_unit(q));
    for (const auto& [z, k] : divisor_.support()) value *= std::pow(q - z, k);
    return value;
}

Multiplier operator*(const Multiplier& a, const Multiplier& b)
{
    std::vector<Complex> unit(std::max(a.unit_.size(), b.unit_.size()), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.unit_.size(); ++i) unit[i] += a.unit_[i];
    for (std::size_t i = 0; i < b.unit_.size(); ++i) unit[i] += b.unit_[i];
    return Multiplier(a.divisor_ + b.divisor_, std::move(unit));
}

Multiplier operator/(const Multiplier& a, const Multiplier& b)
{
    std::vector<Complex> unit(std::max(a.unit_.size(), b.unit_.size()), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.unit_.size(); ++i) unit[i] += a.unit_[i];
    for (std::size_t i = 0; i < b.unit_.size(); ++i) unit[i] -= b.unit_[i];
    return Multiplier(a.divisor_ - b.divisor_, std::move(unit));
}

Multiplier canonical_multiplier(const IntegerDivisor& k) { return Multiplier(k); }

IntegerDivisor section_divisor(const Configuration& config, const CombinatorialSection& s)
{
    return k_divisor(config, CombinatorialSection::base(), s, disk_of(config));
}

double normalize_angle(double theta)
{
    constexpr double two_pi = 2 * std::numbers::pi;
    double r = std::remainder(theta, two_pi);
    if (r <= -std::numbers::pi) r += two_pi;
    return r;
}

Chart::Chart(const Configuration& config, CombinatorialSection section, Multiplier phi, double eps)
    : config_(config), section_(std::move(section)), phi_(std::move(phi)), eps_(eps)
{
    require_admissible(config_);
    k_ = section_divisor(config_, section_);
    if (!(phi_.divisor() == k_))
        fail(ErrorKind::WrongDivisor, "multiplier divisor does not match k_{o,s} of the section");
    min_truncation_ = config_.is_finite() ? config_.explicit_count() : std::max<std::int64_t>(config_.explicit_count(), 1);
    for (const auto& [z, gap] : section_.deviations) {
        const auto [lo, hi] = gap_bounds(config_, gap);
        deviations_.push_back({z, lo, hi});
        // every center strictly between o(z) and s(z) must be enumerated
        const auto [olo, ohi] = gap_bounds(config_, base_gap(config_, z));
        const double a = std::min(ohi, hi), b = std::max(olo, lo);
        if (a <= b) {
            const FiberView view(config_, z);
            for (const auto& p : view.points_in(a, b)) min_truncation_ = std::max(min_truncation_, p.n);
        }
    }
}

Chart::LogModulus Chart::log_modulus(const ImHPoint& zeta) const
{
    std::int64_t N = min_truncation_;
    const double radius = zeta.norm();
    if (!config_.is_finite()) N = detail::resolving_truncation(config_, radius, N);
    for (;;) {
        series::Accumulator acc, deriv;
        bool singular = false;
        detail::for_each_head(config_, N, [&](const ImHPoint& lambda) {
            const Local l = local(lambda, zeta);
            if (detail::is_singular(l.d, zeta, lambda)) singular = true;
            deriv.add(1.0 / l.d);
            const bool plus_o = lambda.t > 0;
            bool plus_s = plus_o;
            for (const auto& dev : deviations_)
                if (-lambda.z == dev.z) plus_s = -lambda.t <= dev.lower;
            double term;
            if (plus_o && plus_s) {
                const double delta =
                    (zeta.t * (zeta.t + 2 * lambda.t) + std::norm(zeta.z) + 2 * (zeta.z * std::conj(lambda.z)).real()) /
                    (l.d + l.norm_lambda);
                const double den = l.norm_lambda + lambda.t;
                const double arg = (delta + zeta.t) / den;
                term = arg > -0.5 ? std::log1p(arg) : std::log(l.zplus / den);
            } else if (!plus_o && !plus_s) {
                const double delta =
                    (zeta.t * (zeta.t + 2 * lambda.t) + std::norm(zeta.z) + 2 * (zeta.z * std::conj(lambda.z)).real()) /
                    (l.d + l.norm_lambda);
                const double den = l.norm_lambda - lambda.t;
                const double arg = (delta - zeta.t) / den;
                term = arg > -0.5 ? -std::log1p(arg) : -std::log(l.zminus / den);
            } else if (plus_o) {
                // 1 / (alpha w)
                term = -std::log((l.norm_lambda + lambda.t) / 2) - std::log(l.zminus / 2);
            } else {
                // beta z
                term = std::log((l.norm_lambda - lambda.t) / 2) + std::log(l.zplus / 2);
            }
            acc.add(term);
        });
        if (singular) fail(ErrorKind::SingularPoint, "point " + format_point(zeta) + " is a center");
        LogModulus out{acc.value(), acc.rounding_bound() + 64 * u * std::abs(acc.value()), deriv.value()};
        const auto tails = config_.tails();
        for (std::size_t j = 0; j < tails.size(); ++j) {
            const std::int64_t M = config_.tail_start(j, N);
            const auto base = series::log_modulus_tail(tails[j], M, zeta.z);
            const auto flow = series::inverse_distance_integral_tail(tails[j], M, 0.0, zeta.t, zeta.z);
            const auto d = series::inverse_distance_tail(tails[j], M, zeta);
            out.value += base.value + flow.value;
            out.error_bound += base.error_bound + flow.error_bound;
            out.derivative += d.value;
        }
        if (!std::isfinite(out.value))
            fail(ErrorKind::NotOnSection, "log modulus diverges at " + format_point(zeta) + "; point is off the section");
        if (out.error_bound <= eps_ || config_.is_finite()) return out;
        if (N >= detail::max_truncation)
            fail(ErrorKind::TailUnresolved, "chart log modulus bound " + std::to_string(out.error_bound) + " exceeds eps");
        N *= 2;
    }
}

double Chart::phase_correction(Complex q) const
{
    double c = 0.0;
    for (const auto& [z, k] : k_.support())
        if (z != q) c += k * std::arg(q - z);
    return c;
}

ChartCoordinates Chart::forward(const ManifoldPoint& x) const
{
    if (!x.zeta.finite() || !std::isfinite(x.theta)) fail(ErrorKind::InvalidArgument, "point is not finite");
    const auto c = class_of(config_, x.zeta);
    if (c.is_fixed()) fail(ErrorKind::SingularPoint, "point " + format_point(x.zeta) + " is a center");
    if (!(c.gap() == section_gap(config_, section_, x.zeta.z)))
        fail(ErrorKind::NotOnSection, "class " + to_string(c.gap()) + " over " + format_complex(x.zeta.z) +
                                          " is not on the section");
    const Complex q = x.zeta.z;
    const auto L = log_modulus(x.zeta);
    const Complex log_p = Complex(0.5 * L.value + k_.degree() * ln2, x.theta + phase_correction(q)) + phi_.log_unit(q);
    return {std::exp(log_p), q};
}

ManifoldPoint Chart::inverse(const ChartCoordinates& pq) const
{
    if (pq.p == Complex(0.0, 0.0) || !std::isfinite(std::abs(pq.p)) || !std::isfinite(std::abs(pq.q)))
        fail(ErrorKind::InvalidArgument, "chart coordinates need p != 0 and finite q");
    const Complex q = pq.q;
    const Complex P = phi_.log_unit(q);
    const double target = 2.0 * (std::log(std::abs(pq.p)) - k_.degree() * ln2 - P.real());
    const auto [lo, hi] = gap_bounds(config_, section_gap(config_, section_, q));
    double start = 0.0;
    if (std::isfinite(lo) && std::isfinite(hi))
        start = 0.5 * (lo + hi);
    else if (std::isfinite(lo))
        start = std::max(lo + 1.0, 0.0);
    else if (std::isfinite(hi))
        start = std::min(hi - 1.0, 0.0);
    auto eval = [&](double t) {
        const auto L = log_modulus({t, q});
        return std::make_pair(L.value - target, L.derivative);
    };
    const double t = detail::solve_increasing(eval, lo, hi, start);
    const double theta = std::arg(pq.p) - P.imag() - phase_correction(q);
    return {{t, q}, normalize_angle(theta)};
}

Complex f_base(const Configuration& config, const ManifoldPoint& x, double eps)
{
    return Chart(config, CombinatorialSection::base(), Multiplier(), eps).forward(x).p;
}

Complex f_chart(const Configuration& config, const CombinatorialSection& s, const Multiplier& phi,
                const ManifoldPoint& x, double eps)
{
    return Chart(config, s, phi, eps).forward(x).p;
}

ChartCoordinates chart_forward(const Configuration& config, const CombinatorialSection& s, const Multiplier& phi,
                               const ManifoldPoint& x, double eps)
{
    return Chart(config, s, phi, eps).forward(x);
}

ManifoldPoint chart_inverse(const Configuration& config, const CombinatorialSection& s, const Multiplier& phi,
                            const ChartCoordinates& pq, double eps)
{
    return Chart(config, s, phi, eps).inverse(pq);
}

ChartCoordinates transition(const Multiplier& phi1, const Multiplier& phi2, const ChartCoordinates& pq)
{
    const IntegerDivisor d = phi2.divisor() - phi1.divisor();
    if (d(pq.q) != 0)
        fail(ErrorKind::OutsideOverlap, "q = " + format_complex(pq.q) + " lies in the support of k_{s1,s2}");
    Complex ratio = std::exp(phi2.log_unit(pq.q) - phi1.log_unit(pq.q));
    for (const auto& [z, k] : d.support()) ratio *= std::pow(pq.q - z, k);
    return {pq.p * ratio, pq.q};
}

double symplectic_defect(const Multiplier& phi1, const Multiplier& phi2, const ChartCoordinates& pq, double h)
{
    auto psi = [&](Complex p, Complex q) { return transition(phi1, phi2, {p, q}); };
    const double hp = h * std::max(1.0, std::abs(pq.p));
    const double hq = h * std::max(1.0, std::abs(pq.q));
    const auto pp = psi(pq.p + hp, pq.q), pm = psi(pq.p - hp, pq.q);
    const auto qp = psi(pq.p, pq.q + hq), qm = psi(pq.p, pq.q - hq);
    const Complex dp_dp = (pp.p - pm.p) / (2 * hp), dq_dp = (pp.q - pm.q) / (2 * hp);
    const Complex dp_dq = (qp.p - qm.p) / (2 * hq), dq_dq = (qp.q - qm.q) / (2 * hq);
    const Complex det = dp_dp * dq_dq - dp_dq * dq_dp;
    const Complex image = psi(pq.p, pq.q).p;
    return std::abs(det / image - 1.0 / pq.p) * std::abs(pq.p);
}

ManifoldPoint act(const Configuration& config, const ManifoldPoint& x, Complex g, double eps)
{
    if (g == Complex(0.0, 0.0) || !std::isfinite(std::abs(g))) fail(ErrorKind::InvalidArgument, "g must be in C^x");
    const auto c = class_of(config, x.zeta);
    if (c.is_fixed()) return x;  // fixed points of the action
    const double target = 0.5 * std::log(std::abs(g));  // flow = log|g|^2 / 4
    const Complex q = x.zeta.z;
    const double t0 = x.zeta.t;
    double t = t0;
    if (target != 0) {
        const auto [lo, hi] = gap_bounds(config, c.gap());
        const double tol = std::max(eps, 1e-10);
        auto eval = [&](double s) {
            const double f = s == t0 ? 0.0 : F_lambda(config, s, t0, q, tol).value;
            // Newton only needs a relative derivative; phi >= 1/(4 d) for the nearest gap end
            const double d = std::min(std::abs(s - lo), std::abs(s - hi));
            return std::make_pair(f - target, phi(config, {s, q}, std::max(tol, 1e-9 / (4 * d))).value);
        };
        t = detail::solve_increasing(eval, lo, hi, t0);
    }
    return {{t, q}, normalize_angle(x.theta + std::arg(g))};
}

Complex stable_product(std::span<const Complex> x)
{
    series::Accumulator re, im;
    for (const Complex& v : x) {
        if (v == Complex(-1.0, 0.0)) return {0.0, 0.0};
        re.add(0.5 * std::log1p(2 * v.real() + std::norm(v)));
        im.add(std::atan2(v.imag(), 1.0 + v.real()));
    }
    return std::polar(std::exp(re.value()), im.value());
}

}  // namespace ainf
