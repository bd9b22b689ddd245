#include "ainf/verify.hpp"

#include <functional>
#include <numbers>
#include <random>

#include "ainf/charts.hpp"
#include "ainf/error.hpp"
#include "ainf/fiber.hpp"
#include "ainf/isomorphism.hpp"
#include "ainf/potential.hpp"
#include "ainf/quotient.hpp"
#include "ainf/validate.hpp"

namespace ainf {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

CheckResult check(std::string name, double metric, double tolerance, std::string detail = {})
{
    return {std::move(name), metric <= tolerance, metric, std::move(detail)};
}

/// Distinct nonzero integers in [-range, range] on the axis z = 0.
Configuration random_axial(Rng& rng, int count, int range)
{
    std::vector<int> values;
    while (static_cast<int>(values.size()) < count) {
        const int v = std::uniform_int_distribution<int>(-range, range)(rng);
        if (v != 0 && std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
    }
    std::vector<ImHPoint> centers;
    for (int v : values) centers.push_back({static_cast<double>(v), 0.0});
    return Configuration::finite(std::move(centers));
}

/// Random height strictly inside the gap (lo, hi), clamped to a window.
double inside(Rng& rng, double lo, double hi, double span = 20.0)
{
    if (!std::isfinite(lo)) lo = hi - span;
    if (!std::isfinite(hi)) hi = lo + span;
    return lo + (hi - lo) * uniform(rng, 0.05, 0.95);
}

std::vector<CombinatorialSection> power_law_sections()
{
    std::vector<CombinatorialSection> out{CombinatorialSection::base()};
    for (CenterIndex k = 1; k <= 4; ++k) out.push_back(CombinatorialSection::single(0.0, Gap{k + 1, k}));
    return out;
}

SuiteReport core_suite(Rng&)
{
    SuiteReport r{"core", {}};
    const auto pl = Configuration::power_law(2.0);
    const auto v = validate(pl);
    const double target = (std::numbers::pi / std::tanh(std::numbers::pi) - 1) / 2;
    r.checks.push_back(check("summability bound", std::abs(v.summability_bound - target), 1e-6));
    r.checks.push_back({"generic and admissible", v.generic && v.chart_admissible, 0.0, {}});
    const auto dup = validate(Configuration::finite({{1, 0}, {1, 0}}));
    r.checks.push_back({"duplicate detected", !dup.generic, 0.0, {}});
    const auto f = fiber(pl, 0.0, -20, 0);
    bool ok = f.points.size() == 4 && f.order_type == OrderType::omega_down();
    for (std::size_t i = 0; ok && i < 4; ++i) ok = f.points[i].value == -static_cast<double>((4 - i) * (4 - i));
    r.checks.push_back({"power law fiber", ok, 0.0, {}});
    const auto rep = representative(pl, {0.0, 0.0}, 200);
    const auto s = check_representative(rep);
    r.checks.push_back(check("moment constant", s.max_deviation, 1e-12));
    return r;
}

SuiteReport potential_suite(Rng& rng)
{
    SuiteReport r{"potential", {}};
    const auto pl = Configuration::power_law(2.0);
    const auto p = phi(pl, {0.0, 0.0}, 1e-10);
    r.checks.push_back(check("phi(0) = pi^2/24", std::abs(p.value - std::numbers::pi * std::numbers::pi / 24), 1e-10));
    const auto single = Configuration::finite({{0.0, 0.0}});
    r.checks.push_back(check("asinh law", std::abs(flow_log_g(single, 1.0, 0, 1, 1e-12).value - std::asinh(1.0) / 4),
                             1e-10));
    double agree = 0, mono = 0;
    for (int i = 0; i < 20; ++i) {
        const CenterIndex k = std::uniform_int_distribution<CenterIndex>(1, 6)(rng);
        const double lo = -static_cast<double>((k + 1) * (k + 1)), hi = -static_cast<double>(k * k);
        const double a = inside(rng, lo, hi), b = inside(rng, lo, hi);
        const auto F = F_lambda(pl, b, a, 0.0, 1e-12);
        const auto G = flow_log_g(pl, 0.0, a, b, 1e-12);
        agree = std::max(agree, std::abs(F.value - G.value) / (F.error_bound + G.error_bound + 1e-15));
        const double h = 1e-4;
        const double m = inside(rng, lo + 0.01, hi - 0.01);
        const double d = (F_lambda(pl, m + h, a, 0.0, 1e-13).value - F_lambda(pl, m - h, a, 0.0, 1e-13).value) / (2 * h);
        const double ph = phi(pl, {m, 0.0}, 1e-13).value;
        mono = std::max(mono, std::abs(d - ph) / ph);
    }
    r.checks.push_back(check("F vs flow (ratio to bound)", agree, 1.0));
    r.checks.push_back(check("dF/deta = phi", mono, 1e-6));
    return r;
}

SuiteReport quotient_suite(Rng& rng)
{
    SuiteReport r{"quotient", {}};
    int mismatches = 0, cocycle = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = random_axial(rng, 1 + trial % 8, 10);
        const double a = uniform(rng, -12, 12), b = uniform(rng, -12, 12);
        bool brute = true;
        for (const auto& x : c.explicit_centers())
            if (-x.t >= std::min(a, b) && -x.t <= std::max(a, b)) brute = false;
        if (brute != same_class(c, {a, 0.0}, {b, 0.0})) ++mismatches;

        std::vector<CombinatorialSection> s;
        for (int i = 0; i < 3; ++i) {
            const auto g = class_of(c, {uniform(rng, -12, 12) + 0.5, 0.0});
            s.push_back(g.is_fixed() ? CombinatorialSection::base() : CombinatorialSection::single(0.0, g.gap()));
        }
        const double disk = 1.0;
        const auto k01 = k_divisor(c, s[0], s[1], disk), k12 = k_divisor(c, s[1], s[2], disk);
        const auto k02 = k_divisor(c, s[0], s[2], disk), k10 = k_divisor(c, s[1], s[0], disk);
        if (!(k02 == k01 + k12) || !(k10 == -k01)) ++cocycle;
    }
    r.checks.push_back(check("same_class vs brute force", mismatches, 0));
    r.checks.push_back(check("k cocycle and antisymmetry", cocycle, 0));
    return r;
}

SuiteReport charts_suite(Rng& rng)
{
    SuiteReport r{"charts", {}};
    const auto pl = Configuration::power_law(2.0);
    double trip = 0, equiv = 0;
    for (const auto& s : power_law_sections()) {
        const Chart chart(pl, s, canonical_multiplier(section_divisor(pl, s)));
        const auto [lo, hi] = gap_bounds(pl, section_gap(pl, s, 0.0));
        for (int i = 0; i < 10; ++i) {
            const bool on_axis = i % 2 == 0;
            const Complex q = on_axis ? Complex(0, 0) : Complex(uniform(rng, -2, 2), uniform(rng, -2, 2));
            const double t = on_axis ? inside(rng, lo, hi) : uniform(rng, -30, 30);
            const ManifoldPoint x{{t, q}, uniform(rng, -3, 3)};
            const auto y = chart.inverse(chart.forward(x));
            trip = std::max(trip, std::abs(y.zeta.t - t) + std::abs(normalize_angle(y.theta - x.theta)));
        }
    }
    for (int i = 0; i < 10; ++i) {
        const ManifoldPoint x{{uniform(rng, -0.9, 5), {uniform(rng, -1, 1), uniform(rng, -1, 1)}}, uniform(rng, -3, 3)};
        const Complex g = std::polar(std::exp(uniform(rng, -1, 1)), uniform(rng, -3, 3));
        const Complex lhs = f_base(pl, act(pl, x, g)), rhs = g * f_base(pl, x);
        equiv = std::max(equiv, std::abs(lhs - rhs) / std::abs(rhs));
    }
    r.checks.push_back(check("round trip", trip, 1e-8));
    r.checks.push_back(check("equivariance", equiv, 1e-8));

    double cocycle = 0, defect = 0;
    for (int i = 0; i < 10; ++i) {
        IntegerDivisor k1, k2, k3;
        k1.set(0.0, -1);
        k2.set(0.0, -2);
        k3.set({1.0, 1.0}, 1);
        const Multiplier m1(k1), m2(k2, {{0.1, 0.2}}), m3(k3, {{0.0, 0.0}, {0.3, -0.1}});
        const ChartCoordinates pq{std::polar(uniform(rng, 0.1, 3), uniform(rng, -3, 3)),
                                  {uniform(rng, -2, 2), uniform(rng, -2, 2)}};
        const auto a = transition(m2, m3, transition(m1, m2, pq));
        const auto b = transition(m1, m3, pq);
        cocycle = std::max(cocycle, std::abs(a.p - b.p) / std::abs(b.p));
        defect = std::max(defect, symplectic_defect(m1, m3, pq));
    }
    r.checks.push_back(check("transition cocycle", cocycle, 1e-14));
    r.checks.push_back(check("dp/p ^ dq preserved", defect, 1e-6));
    return r;
}

SuiteReport isomorphism_suite(Rng& rng)
{
    SuiteReport r{"isomorphism", {}};
    const auto a = Configuration::power_law(2.0), b = Configuration::power_law(3.0);
    r.checks.push_back({"power laws isomorphic", isom_exists(a, b, 100).isomorphic, 0.0, {}});
    const auto data = make_isomorphism(a, b, 100);
    double q_shift = 0, equiv = 0, indep = 0;
    for (int i = 0; i < 10; ++i) {
        const bool on_axis = i % 2 == 0;
        const Complex q = on_axis ? Complex(0, 0) : Complex(uniform(rng, -2, 2), uniform(rng, -2, 2));
        double t = uniform(rng, -30, 30);
        if (on_axis && class_of(a, {t, q}).is_fixed()) t += 0.5;
        const ManifoldPoint x{{t, q}, uniform(rng, -3, 3)};
        const auto y = apply_H(data, x);
        q_shift = std::max(q_shift, std::abs(y.zeta.z - q));
        const Complex g = std::polar(std::exp(uniform(rng, -1, 1)), uniform(rng, -3, 3));
        const auto y1 = apply_H(data, act(a, x, g)), y2 = act(b, y, g);
        equiv = std::max(equiv, std::abs(y1.zeta.t - y2.zeta.t) + std::abs(normalize_angle(y1.theta - y2.theta)));
        CombinatorialSection s = CombinatorialSection::single(0.0, Gap{3, 2});
        if (on_axis) s = CombinatorialSection::single(0.0, class_of(a, x.zeta).gap());
        const auto y3 = apply_H(data, x, s, {{0.2, -0.4}, {0.1, 0.1}});
        indep = std::max(indep, std::abs(y3.zeta.t - y.zeta.t) + std::abs(normalize_angle(y3.theta - y.theta)));
    }
    r.checks.push_back(check("mu_C preserved", q_shift, 0.0));
    r.checks.push_back(check("equivariance", equiv, 1e-8));
    r.checks.push_back(check("chart independence", indep, 1e-8));

    int mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto c1 = random_axial(rng, 1 + trial % 8, 10);
        const auto c2 = random_axial(rng, 1 + (trial / 8) % 8, 10);
        if (isom_exists(c1, c2, 10).isomorphic != (c1.explicit_count() == c2.explicit_count())) ++mismatches;
    }
    r.checks.push_back(check("finite axial classifier", mismatches, 0));
    return r;
}

const std::vector<std::pair<std::string, std::function<SuiteReport(Rng&)>>>& suites()
{
    static const std::vector<std::pair<std::string, std::function<SuiteReport(Rng&)>>> table{
        {"core", core_suite},
        {"potential", potential_suite},
        {"quotient", quotient_suite},
        {"charts", charts_suite},
        {"isomorphism", isomorphism_suite},
    };
    return table;
}

}  // namespace

bool SuiteReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> suite_names()
{
    std::vector<std::string> out;
    for (const auto& [name, f] : suites()) out.push_back(name);
    return out;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed)
{
    for (const auto& [n, f] : suites())
        if (n == name) {
            Rng rng(seed);
            return f(rng);
        }
    fail(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

}  // namespace ainf
