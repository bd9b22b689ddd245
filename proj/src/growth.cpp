#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <atomic>
#include <numbers>
#include <random>
#include <thread>

#include "ainf/error.hpp"
#include "ainf/potential.hpp"
#include "sums.hpp"

namespace ainf {

namespace {

using boost::math::quadrature::gauss;

constexpr double pi = std::numbers::pi;
constexpr int chunks = 64;

/// dist(r, theta) from the origin along the ray at polar angle theta from
/// the t axis, tabulated on a log r grid.
class RayTable {
public:
    RayTable(const Configuration& config, double rho_max, const GrowthOptions& opt) : config_(config), opt_(opt)
    {
        const int n = opt.directions;
        theta_.resize(n);
        dist_.resize(n);
        for (int i = 0; i < n; ++i) theta_[i] = (i + 0.5) * pi / n;
        log_r_.push_back(std::log(opt.r_min));
        for (int i = 0; i < n; ++i) dist_[i].push_back(initial(theta_[i]));
        const double step = std::log(10.0) / opt.points_per_decade;
        while (min_last() < 1.02 * rho_max) {
            if (log_r_.back() > std::log(1e14))
                fail(ErrorKind::InsufficientRange, "distance proxy does not reach rho_max within r <= 1e14");
            const double a = log_r_.back(), b = a + step;
            for (int i = 0; i < n; ++i) dist_[i].push_back(dist_[i].back() + segment(theta_[i], a, b));
            log_r_.push_back(b);
        }
    }

    double log_r_min() const { return log_r_.front(); }
    double log_r_max() const { return log_r_.back(); }

    double lookup(double theta, double log_r) const
    {
        const int n = static_cast<int>(theta_.size());
        double x = theta / pi * n - 0.5;
        x = std::clamp(x, 0.0, n - 1.0);
        const int i = std::min(static_cast<int>(x), n - 2);
        const double fx = x - i;
        double y = (log_r - log_r_.front()) / (log_r_[1] - log_r_[0]);
        y = std::clamp(y, 0.0, static_cast<double>(log_r_.size() - 1));
        const int k = std::min(static_cast<int>(y), static_cast<int>(log_r_.size()) - 2);
        const double fy = y - k;
        auto at = [&](int ii, int kk) { return dist_[ii][kk]; };
        return (1 - fx) * ((1 - fy) * at(i, k) + fy * at(i, k + 1)) + fx * ((1 - fy) * at(i + 1, k) + fy * at(i + 1, k + 1));
    }

private:
    double sqrt_phi(double theta, double r) const
    {
        const ImHPoint p{r * std::cos(theta), Complex(r * std::sin(theta), 0.0)};
        return std::sqrt(0.25 * detail::inverse_distance_lean(config_, p, opt_.relative_accuracy));
    }

    double initial(double theta) const
    {
        // s = v^2 on [0, r_min]
        auto f = [&](double v) { return 2.0 * v * sqrt_phi(theta, v * v); };
        return gauss<double, 20>::integrate(f, 0.0, std::sqrt(opt_.r_min));
    }

    double segment(double theta, double a, double b) const
    {
        auto f = [&](double s) {
            const double r = std::exp(s);
            return r * sqrt_phi(theta, r);
        };
        return gauss<double, 7>::integrate(f, a, b);
    }

    double min_last() const
    {
        double m = INFINITY;
        for (const auto& d : dist_) m = std::min(m, d.back());
        return m;
    }

    const Configuration& config_;
    GrowthOptions opt_;
    std::vector<double> theta_;
    std::vector<double> log_r_;
    std::vector<std::vector<double>> dist_;
};

bool is_axial(const Configuration& config)
{
    for (const auto& c : config.explicit_centers())
        if (c.z != Complex(0.0, 0.0)) return false;
    for (const auto& t : config.tails())
        if (t.base != Complex(0.0, 0.0)) return false;
    return true;
}

}  // namespace

GrowthFit growth_exponent(const Configuration& config, std::span<const double> rho_grid, std::int64_t samples,
                          std::uint64_t seed, const GrowthOptions& options)
{
    if (!is_axial(config)) fail(ErrorKind::NotAxial, "growth experiment needs all centers on the t axis");
    if (rho_grid.size() < 3) fail(ErrorKind::InsufficientRange, "rho grid needs at least 3 points");
    for (std::size_t i = 0; i < rho_grid.size(); ++i)
        if (!(rho_grid[i] > 0) || (i > 0 && !(rho_grid[i] > rho_grid[i - 1])))
            fail(ErrorKind::InvalidArgument, "rho grid must be positive and strictly increasing");
    if (rho_grid.back() < 10.0 * rho_grid.front())
        fail(ErrorKind::InsufficientRange, "rho grid spans less than one decade");
    if (samples < 1) fail(ErrorKind::InvalidArgument, "sample count must be positive");

    const RayTable table(config, rho_grid.back(), options);
    const double lr0 = table.log_r_min(), lr1 = table.log_r_max();
    const double span = lr1 - lr0;
    // 2 pi (fiber) * 4 pi (sphere) * log-r range per unit sample
    const double jacobian = 8.0 * pi * pi * span;
    const std::size_t K = rho_grid.size();

    std::vector<std::vector<double>> buckets(chunks, std::vector<double>(K, 0.0));
    std::atomic<int> next{0};
    auto work = [&] {
        for (int c = next++; c < chunks; c = next++) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(c)};
            std::mt19937_64 rng(seq);
            const std::int64_t begin = samples * c / chunks, end = samples * (c + 1) / chunks;
            auto& bucket = buckets[c];
            for (std::int64_t i = begin; i < end; ++i) {
                const double cos_theta = 2.0 * std::generate_canonical<double, 53>(rng) - 1.0;
                const double log_r = lr0 + span * std::generate_canonical<double, 53>(rng);
                const double theta = std::acos(cos_theta);
                const double d = table.lookup(theta, log_r);
                if (d > rho_grid.back()) continue;
                const double r = std::exp(log_r);
                const ImHPoint p{r * cos_theta, Complex(r * std::sin(theta), 0.0)};
                const double phi = 0.25 * detail::inverse_distance_lean(config, p, options.relative_accuracy);
                const auto k = static_cast<std::size_t>(std::lower_bound(rho_grid.begin(), rho_grid.end(), d) - rho_grid.begin());
                bucket[k] += jacobian * r * r * r * phi;
            }
        }
    };
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, chunks);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    GrowthFit fit;
    fit.rho.assign(rho_grid.begin(), rho_grid.end());
    fit.W.assign(K, 0.0);
    double running = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        for (int c = 0; c < chunks; ++c) running += buckets[c][k];
        fit.W[k] = running / static_cast<double>(samples);
    }
    for (std::size_t k = 0; k < K; ++k) {
        if (!(fit.W[k] > 0)) fail(ErrorKind::InsufficientRange, "no samples fell inside rho = " + std::to_string(fit.rho[k]));
        fit.samples.emplace_back(std::log(fit.rho[k]), std::log(fit.W[k]));
    }
    double mx = 0, my = 0;
    for (const auto& [x, y] : fit.samples) mx += x, my += y;
    mx /= K, my /= K;
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : fit.samples) sxx += (x - mx) * (x - mx), sxy += (x - mx) * (y - my);
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ssr = 0;
    for (const auto& [x, y] : fit.samples) ssr += std::pow(y - fit.intercept - fit.slope * x, 2);
    fit.slope_stderr = K > 2 ? std::sqrt(ssr / (K - 2) / sxx) : 0.0;
    return fit;
}

}  // namespace ainf
