#include "ainf/isomorphism.hpp"

#include <algorithm>
#include <limits>

#include "ainf/error.hpp"
#include "ainf/fiber.hpp"

namespace ainf {

namespace {

std::optional<FiberPoint> anchor_point(const FiberView& view, OrderKind kind)
{
    switch (kind) {
    case OrderKind::Finite:
    case OrderKind::OmegaUp:
        return view.bottom();
    case OrderKind::OmegaDown:
        return view.top();
    case OrderKind::OmegaBoth:
        if (auto p = view.point_at(0.0)) return p;
        return view.next_above(0.0);
    }
    return std::nullopt;
}

/// Signed number of steps from `from` to `to` along the fiber.
std::int64_t rank_between(const FiberView& view, double from, double to)
{
    if (from == to) return 0;
    const std::int64_t c = view.count_in(std::min(from, to), std::max(from, to)) - 1;
    return to > from ? c : -c;
}

FiberPoint step(const FiberView& view, FiberPoint p, std::int64_t r)
{
    for (; r > 0; --r) {
        auto next = view.next_above(p.value);
        if (!next) fail(ErrorKind::NotIsomorphic, "target fiber over " + format_complex(view.z()) + " ends early");
        p = *next;
    }
    for (; r < 0; ++r) {
        auto next = view.next_below(p.value);
        if (!next) fail(ErrorKind::NotIsomorphic, "target fiber over " + format_complex(view.z()) + " ends early");
        p = *next;
    }
    return p;
}

IsomCertificate strict_certificate(const Configuration& source, const Configuration& target, double disk)
{
    IsomCertificate cert;
    cert.delta_source = delta_set(source, disk);
    cert.delta_target = delta_set(target, disk);
    if (cert.delta_source != cert.delta_target) {
        std::vector<Complex> diff;
        for (const Complex& z : cert.delta_source)
            if (!std::binary_search(cert.delta_target.begin(), cert.delta_target.end(), z, ComplexLess{}))
                diff.push_back(z);
        for (const Complex& z : cert.delta_target)
            if (!std::binary_search(cert.delta_source.begin(), cert.delta_source.end(), z, ComplexLess{}))
                diff.push_back(z);
        cert.obstruction = "Delta mismatch at " + format_complex(diff.front());
        return cert;
    }
    for (const Complex& z : cert.delta_source) {
        FiberCertificate f{z, z, FiberView(source, z).order_type(), FiberView(target, z).order_type(), false};
        f.matches = f.source == f.target;
        if (!f.matches && cert.obstruction.empty())
            cert.obstruction = "order types differ over " + format_complex(z) + ": " + to_string(f.source) +
                               " vs " + to_string(f.target);
        cert.fibers.push_back(f);
    }
    cert.isomorphic = cert.obstruction.empty();
    return cert;
}

std::optional<IsomCertificate> shifted_certificate(const Configuration& source, const Configuration& target)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    IsomCertificate cert;
    cert.delta_source = delta_set(source, inf);
    cert.delta_target = delta_set(target, inf);
    if (cert.delta_source.empty() || cert.delta_source.size() != cert.delta_target.size()) return std::nullopt;
    cert.shift = cert.delta_target.front() - cert.delta_source.front();
    std::vector<Complex> remaining = cert.delta_target;
    for (const Complex& z : cert.delta_source) {
        const Complex image = z + cert.shift;
        const double tol = 1e-12 * (1.0 + std::abs(z) + std::abs(cert.shift));
        const auto it = std::find_if(remaining.begin(), remaining.end(),
                                     [&](Complex w) { return std::abs(w - image) <= tol; });
        if (it == remaining.end()) return std::nullopt;
        FiberCertificate f{z, *it, FiberView(source, z).order_type(), FiberView(target, *it).order_type(), false};
        f.matches = f.source == f.target;
        if (!f.matches) return std::nullopt;
        cert.fibers.push_back(f);
        remaining.erase(it);
    }
    cert.isomorphic = true;
    return cert;
}

}  // namespace

IsomCertificate isom_exists(const Configuration& source, const Configuration& target, double disk)
{
    auto cert = strict_certificate(source, target, disk);
    if (cert.isomorphic || source.family() == Family::GeneralAxialFibered ||
        target.family() == Family::GeneralAxialFibered)
        return cert;
    if (auto shifted = shifted_certificate(source, target)) return *shifted;
    return cert;
}

OrderIso::OrderIso(const Configuration& source, const Configuration& target, double disk)
    : source_(source), target_(target), disk_(disk)
{
    const auto cert = strict_certificate(source, target, disk);
    if (!cert.isomorphic) {
        const auto any = isom_exists(source, target, disk);
        if (any.isomorphic)
            fail(ErrorKind::NotIsomorphic, "isomorphic only after translating mu_C by " + format_complex(any.shift) +
                                               "; " + cert.obstruction);
        fail(ErrorKind::NotIsomorphic, cert.obstruction);
    }
    for (const auto& f : cert.fibers) {
        const FiberView a(source_, f.z), b(target_, f.z);
        const auto pa = anchor_point(a, f.source.kind);
        const auto pb = anchor_point(b, f.target.kind);
        if (!pa || !pb) {
            // OmegaBoth without a nonnegative point cannot happen; empty
            // finite fibers are not in Delta
            fail(ErrorKind::NotIsomorphic, "no anchor over " + format_complex(f.z));
        }
        anchors_.emplace(f.z, Anchor{*pa, *pb});
    }
}

std::vector<Complex> OrderIso::bases() const
{
    std::vector<Complex> out;
    for (const auto& [z, a] : anchors_) out.push_back(z);
    return out;
}

FiberPoint OrderIso::map_point(Complex z, CenterIndex n) const
{
    const auto it = anchors_.find(z);
    if (it == anchors_.end()) fail(ErrorKind::InvalidArgument, "no fiber over " + format_complex(z) + " in the disk");
    const FiberView a(source_, z), b(target_, z);
    const std::int64_t r = rank_between(a, it->second.source.value, a.value_of(n));
    return step(b, it->second.target, r);
}

Gap OrderIso::map_gap(Complex z, const Gap& gap) const
{
    if (!anchors_.contains(z)) return gap;  // empty fiber: the only gap
    Gap out;
    if (gap.lower) out.lower = map_point(z, *gap.lower).n;
    if (gap.upper) out.upper = map_point(z, *gap.upper).n;
    return out;
}

CombinatorialSection OrderIso::map_section(const CombinatorialSection& s) const
{
    CombinatorialSection out;
    for (const auto& [z, anchor] : anchors_) {
        const Gap g = map_gap(z, section_gap(source_, s, z));
        if (!(g == base_gap(target_, z))) out.deviations.emplace(z, g);
    }
    return out;
}

OrderIso build_h(const Configuration& source, const Configuration& target, double disk)
{
    return OrderIso(source, target, disk);
}

Multiplier build_phi0(const OrderIso& h)
{
    const auto image = h.map_section(CombinatorialSection::base());
    return canonical_multiplier(k_divisor(h.target(), CombinatorialSection::base(), image, h.disk()));
}

IsomorphismData make_isomorphism(const Configuration& source, const Configuration& target, double disk)
{
    OrderIso h(source, target, disk);
    Multiplier phi0 = build_phi0(h);
    return {std::move(h), std::move(phi0)};
}

ManifoldPoint apply_H(const IsomorphismData& data, const ManifoldPoint& x, const CombinatorialSection& s,
                      const std::vector<Complex>& unit, double eps)
{
    const Configuration& a = data.h.source();
    if (std::abs(x.zeta.z) > data.h.disk())
        fail(ErrorKind::InvalidArgument, "q = " + format_complex(x.zeta.z) + " lies outside the working disk");
    for (const auto& [z, g] : s.deviations)
        if (std::abs(z) > data.h.disk())
            fail(ErrorKind::InvalidArgument, "section deviates outside the working disk");
    if (class_of(a, x.zeta).is_fixed())
        fail(ErrorKind::FixedPointInput, "point " + format_point(x.zeta) + " is a fixed point of the action");
    const Multiplier phi(section_divisor(a, s), unit);
    const Chart from(a, s, phi, eps);
    const auto pq = from.forward(x);
    const Chart to(data.h.target(), data.h.map_section(s), phi * data.phi0, eps);
    return to.inverse(pq);
}

ManifoldPoint apply_H(const IsomorphismData& data, const ManifoldPoint& x, double eps)
{
    const Configuration& a = data.h.source();
    const auto c = class_of(a, x.zeta);
    if (c.is_fixed())
        fail(ErrorKind::FixedPointInput, "point " + format_point(x.zeta) + " is a fixed point of the action");
    CombinatorialSection s;
    if (!(c.gap() == base_gap(a, x.zeta.z))) s.deviations.emplace(x.zeta.z, c.gap());
    return apply_H(data, x, s, {}, eps);
}

}  // namespace ainf
