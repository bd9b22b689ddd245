#pragma once

#include <optional>
#include <vector>

#include "ainf/configuration.hpp"

namespace ainf {

/// A center seen from its fiber: value is -lambda_{n,R}.
struct FiberPoint {
    CenterIndex n = 0;
    double value = 0.0;

    friend bool operator==(const FiberPoint&, const FiberPoint&) = default;
};

struct Fiber {
    Complex z;
    std::vector<FiberPoint> points;  // ascending
    OrderType order_type;
};

/// Queries on the fiber {-lambda_{n,R} : -lambda_{n,C} = z} without
/// enumerating it; tails are handled in closed form.
class FiberView {
public:
    FiberView(const Configuration& config, Complex z);

    Complex z() const noexcept { return z_; }
    bool empty() const noexcept { return explicit_.empty() && tails_.empty(); }

    /// Throws UnknownOrderType for an undeclared nonempty general fiber.
    OrderType order_type() const;

    std::optional<FiberPoint> point_at(double value) const;
    /// Closest point strictly above / below `value`.
    std::optional<FiberPoint> next_above(double value) const;
    std::optional<FiberPoint> next_below(double value) const;
    std::optional<FiberPoint> top() const;
    std::optional<FiberPoint> bottom() const;

    /// Number of points in the closed window [lo, hi]; lo/hi may be infinite
    /// only on sides where the fiber is bounded.
    std::int64_t count_in(double lo, double hi) const;
    std::vector<FiberPoint> points_in(double lo, double hi) const;

    /// -lambda_{n,R}; throws InvalidArgument if n is not on this fiber.
    double value_of(CenterIndex n) const;

private:
    struct TailRef {
        std::size_t index;
        PowerTail tail;
    };

    std::optional<FiberPoint> tail_next_above(const TailRef& ref, double value) const;
    std::optional<FiberPoint> tail_next_below(const TailRef& ref, double value) const;
    std::int64_t tail_count(const TailRef& ref, double lo, double hi, std::int64_t* m_lo) const;
    void require_known(bool below, double value) const;

    Configuration config_;
    Complex z_;
    std::vector<FiberPoint> explicit_;
    std::vector<TailRef> tails_;
    std::optional<OrderType> declared_;
};

/// {-lambda_{n,C}} inside the closed disk of the given radius, sorted.
std::vector<Complex> delta_set(const Configuration& config, double disk_radius);

/// Materialized fiber restricted to the window [lo, hi].
Fiber fiber(const Configuration& config, Complex z, double lo, double hi);

}  // namespace ainf
