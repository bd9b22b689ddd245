#include "ainf/quotient.hpp"

#include <limits>

#include "ainf/error.hpp"

namespace ainf {

std::string to_string(Ordering o)
{
    switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
    case Ordering::Incomparable: return "Incomparable";
    }
    return "?";
}

std::string to_string(const Gap& gap)
{
    auto side = [](const std::optional<CenterIndex>& n, const char* inf) { return n ? std::to_string(*n) : std::string(inf); };
    return "(" + side(gap.lower, "-inf") + ", " + side(gap.upper, "+inf") + ")";
}

QuotientClass class_of(const Configuration& config, const ImHPoint& zeta)
{
    if (!zeta.finite()) fail(ErrorKind::InvalidArgument, "point is not finite");
    const FiberView view(config, zeta.z);
    if (auto p = view.point_at(zeta.t)) return {zeta.z, FixedClass{p->n}};
    Gap gap;
    if (auto p = view.next_below(zeta.t)) gap.lower = p->n;
    if (auto p = view.next_above(zeta.t)) gap.upper = p->n;
    return {zeta.z, gap};
}

bool same_class(const Configuration& config, const ImHPoint& zeta, const ImHPoint& eta)
{
    if (zeta == eta) return true;
    return class_of(config, zeta) == class_of(config, eta);
}

namespace {

double value_of(const Configuration& config, CenterIndex n) { return -config.center(n).t; }

/// Fixed(n) -> (v_n, 0); Gap -> (v_lower or -inf, 1).
std::pair<double, int> order_key(const Configuration& config, const QuotientClass& c)
{
    if (c.is_fixed()) return {value_of(config, std::get<FixedClass>(c.position).n), 0};
    const auto& g = c.gap();
    return {g.lower ? value_of(config, *g.lower) : -std::numeric_limits<double>::infinity(), 1};
}

}  // namespace

Ordering compare(const Configuration& config, const QuotientClass& a, const QuotientClass& b)
{
    if (a.z != b.z) return Ordering::Incomparable;
    const auto ka = order_key(config, a), kb = order_key(config, b);
    if (ka < kb) return Ordering::Less;
    if (kb < ka) return Ordering::Greater;
    return Ordering::Equal;
}

std::pair<double, double> gap_bounds(const Configuration& config, const Gap& gap)
{
    return {gap.lower ? value_of(config, *gap.lower) : -std::numeric_limits<double>::infinity(),
            gap.upper ? value_of(config, *gap.upper) : std::numeric_limits<double>::infinity()};
}

bool is_valid_gap(const Configuration& config, Complex z, const Gap& gap)
{
    const FiberView view(config, z);
    auto on_fiber = [&](CenterIndex n) { return n >= 1 && (config.is_finite() ? n <= config.explicit_count() : true) && -config.center(n).z == z; };
    if (gap.lower && !on_fiber(*gap.lower)) return false;
    if (gap.upper && !on_fiber(*gap.upper)) return false;
    if (gap.lower) {
        const auto above = view.next_above(value_of(config, *gap.lower));
        return above ? gap.upper == above->n : !gap.upper;
    }
    if (gap.upper) {
        const auto below = view.next_below(value_of(config, *gap.upper));
        return !below;
    }
    return view.empty();
}

Gap base_gap(const Configuration& config, Complex z)
{
    const auto c = class_of(config, {0.0, z});
    if (c.is_fixed())
        fail(ErrorKind::NotChartAdmissible, "center " + std::to_string(std::get<FixedClass>(c.position).n) +
                                                " has zero real part, so the base section is undefined over " +
                                                format_complex(z));
    return c.gap();
}

Gap section_gap(const Configuration& config, const CombinatorialSection& s, Complex z)
{
    auto it = s.deviations.find(z);
    if (it != s.deviations.end()) return it->second;
    return base_gap(config, z);
}

void validate_section(const Configuration& config, const CombinatorialSection& s)
{
    for (const auto& [z, gap] : s.deviations)
        if (!is_valid_gap(config, z, gap))
            fail(ErrorKind::InvalidArgument, to_string(gap) + " is not a gap of the fiber over " + format_complex(z));
}

bool on_section(const Configuration& config, const CombinatorialSection& s, const ImHPoint& zeta)
{
    const auto c = class_of(config, zeta);
    return !c.is_fixed() && c.gap() == section_gap(config, s, zeta.z);
}

int IntegerDivisor::operator()(Complex z) const
{
    auto it = values_.find(z);
    return it == values_.end() ? 0 : it->second;
}

void IntegerDivisor::set(Complex z, int k)
{
    if (k == 0)
        values_.erase(z);
    else
        values_[z + Complex(0.0, 0.0)] = k;
}

int IntegerDivisor::degree() const
{
    int d = 0;
    for (const auto& [z, k] : values_) d += k;
    return d;
}

IntegerDivisor IntegerDivisor::operator-() const
{
    IntegerDivisor out;
    for (const auto& [z, k] : values_) out.values_[z] = -k;
    return out;
}

IntegerDivisor operator+(const IntegerDivisor& a, const IntegerDivisor& b)
{
    IntegerDivisor out = a;
    for (const auto& [z, k] : b.values_) out.set(z, out(z) + k);
    return out;
}

std::int64_t gap_distance(const FiberView& fiber, const Configuration& config, const Gap& from, const Gap& to)
{
    if (from == to) return 0;
    const auto [lo1, hi1] = gap_bounds(config, from);
    const auto [lo2, hi2] = gap_bounds(config, to);
    if (hi1 <= lo2) return fiber.count_in(hi1, lo2);
    if (hi2 <= lo1) return -fiber.count_in(hi2, lo1);
    fail(ErrorKind::InvalidArgument, "gaps " + to_string(from) + " and " + to_string(to) + " overlap without being equal");
}

IntegerDivisor k_divisor(const Configuration& config, const CombinatorialSection& s1, const CombinatorialSection& s2,
                         double disk)
{
    if (config.family() == Family::GeneralAxialFibered && disk > config.working_radius())
        fail(ErrorKind::TailUnresolved, "disk exceeds the working radius");
    validate_section(config, s1);
    validate_section(config, s2);
    std::vector<Complex> keys;
    for (const auto& [z, g] : s1.deviations) keys.push_back(z);
    for (const auto& [z, g] : s2.deviations) keys.push_back(z);
    IntegerDivisor k;
    for (const Complex& z : keys) {
        if (std::abs(z) > disk || k(z) != 0) continue;
        const FiberView view(config, z);
        const auto count = gap_distance(view, config, section_gap(config, s1, z), section_gap(config, s2, z));
        if (count > std::numeric_limits<int>::max() || count < std::numeric_limits<int>::min())
            fail(ErrorKind::TailUnresolved, "divisor value does not fit an int");
        k.set(z, static_cast<int>(count));
    }
    return k;
}

bool is_continuous(const Configuration& config, const CombinatorialSection& base,
                   const std::vector<std::pair<Complex, Gap>>& candidate, double disk)
{
    if (config.family() == Family::GeneralAxialFibered && disk > config.working_radius())
        fail(ErrorKind::TailUnresolved, "disk exceeds the working radius");
    validate_section(config, base);
    CombinatorialSection s;
    for (const auto& [z, gap] : candidate) {
        if (!is_valid_gap(config, z, gap)) return false;
        auto [it, inserted] = s.deviations.emplace(z, gap);
        if (!inserted && !(it->second == gap)) return false;  // two gaps on one fiber
    }
    // a finite assignment deviates on finitely many fibers; support is finite
    const auto k = k_divisor(config, base, s, disk);
    return k.support().size() <= candidate.size() + base.deviations.size();
}

}  // namespace ainf
