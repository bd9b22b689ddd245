#include "ainf/validate.hpp"

#include <algorithm>
#include <tuple>

#include "ainf/error.hpp"
#include "ainf/series.hpp"
#include "sums.hpp"

namespace ainf {

ValidityReport validate(const Configuration& config)
{
    ValidityReport report;
    const std::int64_t N = config.is_finite() ? config.explicit_count()
                                              : std::max(config.truncation(), config.explicit_count());
    report.enumerated = N;

    std::vector<std::pair<ImHPoint, CenterIndex>> centers;
    centers.reserve(static_cast<std::size_t>(N));
    config.for_each_center(0, N, [&](CenterIndex n, const ImHPoint& c) { centers.emplace_back(c, n); });

    auto key = [](const ImHPoint& p) { return std::make_tuple(p.t, p.z.real(), p.z.imag()); };
    std::sort(centers.begin(), centers.end(),
              [&](const auto& a, const auto& b) { return key(a.first) < key(b.first); });
    for (std::size_t i = 1; i < centers.size(); ++i)
        if (centers[i].first == centers[i - 1].first)
            report.duplicates.emplace_back(std::min(centers[i - 1].second, centers[i].second),
                                           std::max(centers[i - 1].second, centers[i].second));

    // explicit centers against tail terms past the enumeration
    const auto tails = config.tails();
    const auto explicit_centers = config.explicit_centers();
    for (std::size_t i = 0; i < explicit_centers.size(); ++i) {
        const auto& c = explicit_centers[i];
        for (std::size_t j = 0; j < tails.size(); ++j) {
            const auto& t = tails[j];
            if (c.z != t.base || c.t * t.sign <= 0) continue;
            const double m = std::round(std::pow(std::abs(c.t) / t.scale, 1.0 / t.exponent));
            if (m < static_cast<double>(config.tail_start(j, N))) continue;
            if (t.magnitude(static_cast<std::int64_t>(m)) == std::abs(c.t))
                report.duplicates.emplace_back(static_cast<CenterIndex>(i + 1),
                                               config.tail_index(j, static_cast<std::int64_t>(m)));
        }
    }
    std::sort(report.duplicates.begin(), report.duplicates.end());
    report.generic = report.duplicates.empty();
    for (const auto& [a, b] : report.duplicates)
        report.violations.push_back("generic: centers " + std::to_string(a) + " and " + std::to_string(b) + " coincide");

    series::Accumulator acc;
    for (const auto& [c, n] : centers) acc.add(1.0 / (1.0 + c.norm()));
    double bound = acc.value() + acc.rounding_bound();
    if (!tails.empty()) {
        std::int64_t M = N;
        auto reaches_one = [&] {
            for (std::size_t j = 0; j < tails.size(); ++j)
                if (tails[j].magnitude(config.tail_start(j, M)) < 1.0) return false;
            return true;
        };
        while (!reaches_one() && M < detail::max_truncation) M *= 2;
        if (M > N) {
            series::Accumulator extra;
            config.for_each_center(N, M, [&](CenterIndex, const ImHPoint& c) { extra.add(1.0 / (1.0 + c.norm())); });
            bound += extra.value() + extra.rounding_bound();
        }
        for (std::size_t j = 0; j < tails.size(); ++j)
            bound += series::reciprocal_tail(tails[j], config.tail_start(j, M)).value;
    }
    report.summability_bound = bound;

    for (const auto& [c, n] : centers)
        if (c.t == 0.0) report.zero_real_part.push_back(n);
    std::sort(report.zero_real_part.begin(), report.zero_real_part.end());
    report.chart_admissible = report.zero_real_part.empty();
    for (CenterIndex n : report.zero_real_part)
        report.violations.push_back("chart_admissible: lambda_" + std::to_string(n) + " has zero real part");
    return report;
}

StabilityReport check_representative(const TruncatedRepresentative& rep, const std::optional<std::vector<double>>& t,
                                     double relative_tolerance)
{
    if (rep.entries.empty()) fail(ErrorKind::InvalidArgument, "representative has no entries");
    const auto count = static_cast<std::int64_t>(rep.entries.size());
    if (t && static_cast<std::int64_t>(t->size()) != count)
        fail(ErrorKind::InvalidArgument, "t sequence length differs from the representative");

    StabilityReport report;
    std::vector<Complex> moments(rep.entries.size());
    double scale = 1.0;
    for (std::int64_t n = 1; n <= count; ++n) {
        const auto& [z, w] = rep.entries[static_cast<std::size_t>(n - 1)];
        const Complex lc = rep.config.center(n).z;
        moments[static_cast<std::size_t>(n - 1)] = 2.0 * z * w - lc;
        scale = std::max(scale, std::abs(2.0 * z * w) + std::abs(lc));
    }
    report.moment = moments.front();
    for (const auto& m : moments) report.max_deviation = std::max(report.max_deviation, std::abs(m - report.moment));
    report.moment_constant = report.max_deviation <= relative_tolerance * scale;

    // unstable iff some z_n = 0 and w_m = 0 with t_n > t_m
    std::optional<std::pair<double, CenterIndex>> top_z0, bottom_w0;
    for (std::int64_t n = 1; n <= count; ++n) {
        const auto& [z, w] = rep.entries[static_cast<std::size_t>(n - 1)];
        const double tn = t ? (*t)[static_cast<std::size_t>(n - 1)] : rep.config.center(n).t;
        if (z == Complex(0.0, 0.0) && (!top_z0 || tn > top_z0->first)) top_z0 = {tn, n};
        if (w == Complex(0.0, 0.0) && (!bottom_w0 || tn < bottom_w0->first)) bottom_w0 = {tn, n};
    }
    report.stable = !(top_z0 && bottom_w0 && top_z0->first > bottom_w0->first);
    if (!report.stable) report.unstable_pair = std::make_pair(top_z0->second, bottom_w0->second);
    return report;
}

}  // namespace ainf
