#include "ainf/fiber.hpp"

#include <algorithm>
#include <limits>

#include "ainf/error.hpp"

namespace ainf {

namespace {

constexpr std::int64_t term_limit = std::int64_t{1} << 52;

/// Smallest m >= first with magnitude(m) >= x (strict: > x).
std::int64_t first_reaching(const PowerTail& tail, double x, bool strict)
{
    auto reached = [&](std::int64_t m) { return strict ? tail.magnitude(m) > x : tail.magnitude(m) >= x; };
    if (reached(tail.first)) return tail.first;
    const double guess = std::pow(x / tail.scale, 1.0 / tail.exponent);
    if (!(guess < static_cast<double>(term_limit)))
        fail(ErrorKind::TailUnresolved, "fiber query beyond representable tail terms");
    std::int64_t m = std::max<std::int64_t>(tail.first, static_cast<std::int64_t>(guess));
    while (m > tail.first && reached(m - 1)) --m;
    while (!reached(m)) ++m;
    return m;
}

}  // namespace

FiberView::FiberView(const Configuration& config, Complex z) : config_(config), z_(z)
{
    const auto centers = config.explicit_centers();
    for (std::size_t i = 0; i < centers.size(); ++i)
        if (-centers[i].z == z) explicit_.push_back({static_cast<CenterIndex>(i + 1), -centers[i].t});
    std::sort(explicit_.begin(), explicit_.end(), [](const FiberPoint& a, const FiberPoint& b) { return a.value < b.value; });
    const auto tails = config.tails();
    for (std::size_t j = 0; j < tails.size(); ++j)
        if (-tails[j].base == z) tails_.push_back({j, tails[j]});
    for (const auto& d : config.declarations())
        if (d.z == z) declared_ = d.asymptotic;
}

OrderType FiberView::order_type() const
{
    bool down = false, up = false;
    for (const auto& ref : tails_) (ref.tail.sign > 0 ? down : up) = true;
    OrderType derived = OrderType::finite(static_cast<std::int64_t>(explicit_.size()));
    if (down && up)
        derived = OrderType::omega_both();
    else if (down)
        derived = OrderType::omega_down();
    else if (up)
        derived = OrderType::omega_up();

    if (config_.family() != Family::GeneralAxialFibered) return derived;
    if (!declared_) {
        if (empty()) return derived;
        fail(ErrorKind::UnknownOrderType, "no asymptotic order type declared for the fiber over " +
                                              format_complex(z_));
    }
    if (!tails_.empty() && !(derived == *declared_))
        fail(ErrorKind::InvalidConfig, "declared order type " + to_string(*declared_) + " contradicts the tails (" +
                                           to_string(derived) + ")");
    if (declared_->kind == OrderKind::Finite && !(derived == *declared_))
        fail(ErrorKind::InvalidConfig, "declared " + to_string(*declared_) + " but the fiber has " +
                                           std::to_string(explicit_.size()) + " points");
    return *declared_;
}

void FiberView::require_known(bool below, double value) const
{
    if (config_.family() != Family::GeneralAxialFibered || !declared_) return;
    bool covered = false;
    for (const auto& ref : tails_) covered |= below ? ref.tail.sign > 0 : ref.tail.sign < 0;
    const bool unbounded = below ? declared_->unbounded_below() : declared_->unbounded_above();
    if (unbounded && !covered)
        fail(ErrorKind::TailUnresolved, "fiber points beyond " + std::to_string(value) +
                                            " lie outside the working disk and are only declared asymptotically");
}

std::optional<FiberPoint> FiberView::point_at(double value) const
{
    for (const auto& p : explicit_)
        if (p.value == value) return p;
    for (const auto& ref : tails_) {
        const double a = ref.tail.sign > 0 ? -value : value;
        if (!(a > 0)) continue;
        const std::int64_t m = first_reaching(ref.tail, a, false);
        if (ref.tail.magnitude(m) == a) return FiberPoint{config_.tail_index(ref.index, m), value};
    }
    return std::nullopt;
}

std::optional<FiberPoint> FiberView::tail_next_above(const TailRef& ref, double value) const
{
    const auto& t = ref.tail;
    std::int64_t m;
    if (t.sign < 0) {
        m = first_reaching(t, value, true);
    } else {
        m = first_reaching(t, -value, false) - 1;
        if (m < t.first) return std::nullopt;
    }
    return FiberPoint{config_.tail_index(ref.index, m), -t.sign * t.magnitude(m)};
}

std::optional<FiberPoint> FiberView::tail_next_below(const TailRef& ref, double value) const
{
    const auto& t = ref.tail;
    std::int64_t m;
    if (t.sign > 0) {
        m = first_reaching(t, -value, true);
    } else {
        m = first_reaching(t, value, false) - 1;
        if (m < t.first) return std::nullopt;
    }
    return FiberPoint{config_.tail_index(ref.index, m), -t.sign * t.magnitude(m)};
}

std::optional<FiberPoint> FiberView::next_above(double value) const
{
    std::optional<FiberPoint> best;
    auto consider = [&](const std::optional<FiberPoint>& p) {
        if (p && (!best || p->value < best->value)) best = p;
    };
    auto it = std::upper_bound(explicit_.begin(), explicit_.end(), value,
                               [](double v, const FiberPoint& p) { return v < p.value; });
    if (it != explicit_.end()) consider(*it);
    for (const auto& ref : tails_) consider(tail_next_above(ref, value));
    if (!best) require_known(false, value);
    return best;
}

std::optional<FiberPoint> FiberView::next_below(double value) const
{
    std::optional<FiberPoint> best;
    auto consider = [&](const std::optional<FiberPoint>& p) {
        if (p && (!best || p->value > best->value)) best = p;
    };
    auto it = std::lower_bound(explicit_.begin(), explicit_.end(), value,
                               [](const FiberPoint& p, double v) { return p.value < v; });
    if (it != explicit_.begin()) consider(*std::prev(it));
    for (const auto& ref : tails_) consider(tail_next_below(ref, value));
    if (!best) require_known(true, value);
    return best;
}

std::optional<FiberPoint> FiberView::top() const
{
    for (const auto& ref : tails_)
        if (ref.tail.sign < 0) return std::nullopt;
    require_known(false, INFINITY);
    std::optional<FiberPoint> best;
    if (!explicit_.empty()) best = explicit_.back();
    for (const auto& ref : tails_) {
        const FiberPoint p{config_.tail_index(ref.index, ref.tail.first), -ref.tail.magnitude(ref.tail.first)};
        if (!best || p.value > best->value) best = p;
    }
    return best;
}

std::optional<FiberPoint> FiberView::bottom() const
{
    for (const auto& ref : tails_)
        if (ref.tail.sign > 0) return std::nullopt;
    require_known(true, -INFINITY);
    std::optional<FiberPoint> best;
    if (!explicit_.empty()) best = explicit_.front();
    for (const auto& ref : tails_) {
        const FiberPoint p{config_.tail_index(ref.index, ref.tail.first), ref.tail.magnitude(ref.tail.first)};
        if (!best || p.value < best->value) best = p;
    }
    return best;
}

std::int64_t FiberView::tail_count(const TailRef& ref, double lo, double hi, std::int64_t* m_lo) const
{
    const auto& t = ref.tail;
    // magnitudes a with -sign*a in [lo, hi]
    const double a_lo = t.sign > 0 ? -hi : lo;
    const double a_hi = t.sign > 0 ? -lo : hi;
    if (!(a_hi >= a_lo) || a_hi <= 0) return 0;
    if (std::isinf(a_hi))
        fail(ErrorKind::InvalidArgument, "window is unbounded on a side where the fiber is infinite");
    const std::int64_t first = first_reaching(t, std::max(a_lo, 0.0), false);
    const std::int64_t past = first_reaching(t, a_hi, true);
    if (m_lo) *m_lo = first;
    return std::max<std::int64_t>(0, past - first);
}

std::int64_t FiberView::count_in(double lo, double hi) const
{
    if (!(lo <= hi)) return 0;
    if (std::isinf(lo)) require_known(true, lo);
    if (std::isinf(hi)) require_known(false, hi);
    std::int64_t count = 0;
    for (const auto& p : explicit_) count += (p.value >= lo && p.value <= hi);
    for (const auto& ref : tails_) count += tail_count(ref, lo, hi, nullptr);
    return count;
}

std::vector<FiberPoint> FiberView::points_in(double lo, double hi) const
{
    std::vector<FiberPoint> out;
    if (!(lo <= hi)) return out;
    constexpr std::int64_t limit = 50'000'000;
    if (count_in(lo, hi) > limit) fail(ErrorKind::InvalidArgument, "window holds too many fiber points to list");
    for (const auto& p : explicit_)
        if (p.value >= lo && p.value <= hi) out.push_back(p);
    for (const auto& ref : tails_) {
        std::int64_t m0 = 0;
        const std::int64_t count = tail_count(ref, lo, hi, &m0);
        for (std::int64_t m = m0; m < m0 + count; ++m)
            out.push_back({config_.tail_index(ref.index, m), -ref.tail.sign * ref.tail.magnitude(m)});
    }
    std::sort(out.begin(), out.end(), [](const FiberPoint& a, const FiberPoint& b) { return a.value < b.value; });
    return out;
}

double FiberView::value_of(CenterIndex n) const
{
    const ImHPoint c = config_.center(n);
    if (-c.z != z_) fail(ErrorKind::InvalidArgument, "center " + std::to_string(n) + " is not on this fiber");
    return -c.t;
}

std::vector<Complex> delta_set(const Configuration& config, double disk_radius)
{
    if (config.family() == Family::GeneralAxialFibered && disk_radius > config.working_radius())
        fail(ErrorKind::TailUnresolved, "disk radius exceeds the working radius " + std::to_string(config.working_radius()));
    std::vector<Complex> out;
    for (const auto& c : config.explicit_centers())
        if (std::abs(c.z) <= disk_radius) out.push_back(-c.z + Complex(0.0, 0.0));
    for (const auto& t : config.tails())
        if (std::abs(t.base) <= disk_radius) out.push_back(-t.base + Complex(0.0, 0.0));
    std::sort(out.begin(), out.end(), ComplexLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Fiber fiber(const Configuration& config, Complex z, double lo, double hi)
{
    FiberView view(config, z);
    return {z, view.points_in(lo, hi), view.order_type()};
}

}  // namespace ainf
