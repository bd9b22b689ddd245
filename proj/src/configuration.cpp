#include "ainf/configuration.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "ainf/error.hpp"

namespace ainf {

namespace {

void require_finite(const ImHPoint& p, const char* what)
{
    if (!p.finite()) fail(ErrorKind::InvalidConfig, std::string(what) + " has a non-finite component");
}

void require_tail(const PowerTail& tail)
{
    if (!(tail.exponent > 1.0) || !std::isfinite(tail.exponent))
        fail(ErrorKind::InvalidConfig, "tail exponent must be a finite real > 1");
    if (!(tail.scale > 0.0) || !std::isfinite(tail.scale))
        fail(ErrorKind::InvalidConfig, "tail scale must be a finite real > 0");
    if (tail.sign != 1 && tail.sign != -1) fail(ErrorKind::InvalidConfig, "tail sign must be +1 or -1");
    if (tail.first < 1) fail(ErrorKind::InvalidConfig, "tail first term must be >= 1");
    if (!std::isfinite(tail.base.real()) || !std::isfinite(tail.base.imag()))
        fail(ErrorKind::InvalidConfig, "tail base is not finite");
}

void require_truncation(std::int64_t truncation)
{
    if (truncation < 1) fail(ErrorKind::InvalidConfig, "truncation must be a positive integer");
}

}  // namespace

std::string format_double(double x)
{
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string_view to_string(Family family) noexcept
{
    switch (family) {
    case Family::PowerLaw: return "power_law";
    case Family::FiniteList: return "finite";
    case Family::AxialMonotone: return "axial";
    case Family::GeneralAxialFibered: return "general";
    }
    return "unknown";
}

std::string to_string(const OrderType& type)
{
    switch (type.kind) {
    case OrderKind::Finite: return "Finite(" + std::to_string(type.count) + ")";
    case OrderKind::OmegaUp: return "OmegaUp";
    case OrderKind::OmegaDown: return "OmegaDown";
    case OrderKind::OmegaBoth: return "OmegaBoth";
    }
    return "?";
}

std::string format_complex(Complex z)
{
    return format_double(z.real()) + (std::signbit(z.imag()) ? "" : "+") + format_double(z.imag()) + "i";
}

std::string format_point(const ImHPoint& p)
{
    return "(" + format_double(p.t) + ", " + format_complex(p.z) + ")";
}

Configuration Configuration::power_law(double beta, std::int64_t truncation)
{
    if (!(beta > 1.0) || !std::isfinite(beta)) fail(ErrorKind::InvalidConfig, "power law needs beta > 1");
    require_truncation(truncation);
    auto d = std::make_shared<Data>();
    d->family = Family::PowerLaw;
    d->beta = beta;
    d->truncation = truncation;
    d->tails.push_back(PowerTail{{0.0, 0.0}, 1, 1.0, beta, 1});
    d->working_radius = INFINITY;
    return Configuration(std::move(d));
}

Configuration Configuration::finite(std::vector<ImHPoint> centers)
{
    for (const auto& c : centers) require_finite(c, "center");
    auto d = std::make_shared<Data>();
    d->family = Family::FiniteList;
    d->truncation = std::max<std::int64_t>(1, static_cast<std::int64_t>(centers.size()));
    d->centers = std::move(centers);
    d->working_radius = INFINITY;
    return Configuration(std::move(d));
}

Configuration Configuration::axial(std::vector<double> prefix, double scale, double exponent,
                                   std::int64_t truncation)
{
    require_truncation(truncation);
    auto d = std::make_shared<Data>();
    d->family = Family::AxialMonotone;
    d->truncation = truncation;
    for (double a : prefix) {
        if (!std::isfinite(a)) fail(ErrorKind::InvalidConfig, "axial prefix value is not finite");
        d->centers.push_back({a, {0.0, 0.0}});
    }
    PowerTail tail{{0.0, 0.0}, 1, scale, exponent, static_cast<std::int64_t>(prefix.size()) + 1};
    require_tail(tail);
    d->tails.push_back(tail);
    d->working_radius = INFINITY;
    return Configuration(std::move(d));
}

Configuration Configuration::general(std::vector<ImHPoint> centers, std::vector<PowerTail> tails,
                                     std::vector<FiberDeclaration> fibers, double working_radius,
                                     std::int64_t truncation)
{
    require_truncation(truncation);
    for (const auto& c : centers) require_finite(c, "center");
    for (const auto& t : tails) require_tail(t);
    if (!(working_radius > 0.0)) fail(ErrorKind::InvalidConfig, "working radius must be positive");
    auto d = std::make_shared<Data>();
    d->family = Family::GeneralAxialFibered;
    d->truncation = truncation;
    d->centers = std::move(centers);
    d->tails = std::move(tails);
    d->fibers = std::move(fibers);
    d->working_radius = working_radius;
    return Configuration(std::move(d));
}

double Configuration::beta() const
{
    if (data_->family != Family::PowerLaw) fail(ErrorKind::InvalidArgument, "beta is only defined for power_law");
    return data_->beta;
}

Configuration Configuration::with_truncation(std::int64_t truncation) const
{
    require_truncation(truncation);
    auto d = std::make_shared<Data>(*data_);
    d->truncation = truncation;
    return Configuration(std::move(d));
}

std::optional<std::int64_t> Configuration::size() const noexcept
{
    if (!is_finite()) return std::nullopt;
    return explicit_count();
}

ImHPoint Configuration::center(CenterIndex n) const
{
    const std::int64_t k = explicit_count();
    if (n < 1) fail(ErrorKind::InvalidArgument, "center index must be >= 1");
    if (n <= k) return data_->centers[static_cast<std::size_t>(n - 1)];
    if (data_->tails.empty())
        fail(ErrorKind::InvalidArgument, "center index " + std::to_string(n) + " exceeds configuration size");
    const auto tails = static_cast<std::int64_t>(data_->tails.size());
    const std::int64_t offset = n - k - 1;
    const auto j = static_cast<std::size_t>(offset % tails);
    const auto& tail = data_->tails[j];
    return tail.center(tail.first + offset / tails);
}

CenterIndex Configuration::tail_index(std::size_t tail, std::int64_t m) const noexcept
{
    const auto tails = static_cast<std::int64_t>(data_->tails.size());
    return explicit_count() + (m - data_->tails[tail].first) * tails + static_cast<std::int64_t>(tail) + 1;
}

std::int64_t Configuration::tail_start(std::size_t tail, CenterIndex n) const noexcept
{
    const auto tails = static_cast<std::int64_t>(data_->tails.size());
    const std::int64_t first_index = explicit_count() + static_cast<std::int64_t>(tail) + 1;
    const std::int64_t enumerated = n < first_index ? 0 : (n - first_index) / tails + 1;
    return data_->tails[tail].first + enumerated;
}

CenterIndex Configuration::covering_truncation(std::span<const std::int64_t> starts) const noexcept
{
    CenterIndex n = explicit_count();
    for (std::size_t j = 0; j < data_->tails.size() && j < starts.size(); ++j)
        if (starts[j] > data_->tails[j].first) n = std::max(n, tail_index(j, starts[j] - 1));
    return n;
}

std::string Configuration::canonical_string() const
{
    std::ostringstream out;
    const auto& d = *data_;
    out << to_string(d.family) << ";beta=" << format_double(d.beta) << ";N=" << d.truncation << ";R=" << format_double(d.working_radius);
    for (const auto& c : d.centers) out << ";c" << format_double(c.t) << ',' << format_double(c.z.real()) << ',' << format_double(c.z.imag());
    for (const auto& t : d.tails)
        out << ";t" << format_double(t.base.real()) << ',' << format_double(t.base.imag()) << ',' << t.sign << ','
            << format_double(t.scale) << ',' << format_double(t.exponent) << ',' << t.first;
    for (const auto& f : d.fibers)
        out << ";f" << format_double(f.z.real()) << ',' << format_double(f.z.imag()) << ',' << to_string(f.asymptotic);
    return out.str();
}

}  // namespace ainf
