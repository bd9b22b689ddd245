#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "ainf/configuration.hpp"
#include "ainf/fiber.hpp"

namespace ainf {

struct FixedClass {
    CenterIndex n = 0;
    friend bool operator==(const FixedClass&, const FixedClass&) = default;
};

/// Open gap between adjacent fiber points; nullopt is the -inf / +inf sentinel.
struct Gap {
    std::optional<CenterIndex> lower;
    std::optional<CenterIndex> upper;
    friend bool operator==(const Gap&, const Gap&) = default;
};

struct QuotientClass {
    Complex z;
    std::variant<FixedClass, Gap> position;

    bool is_fixed() const noexcept { return std::holds_alternative<FixedClass>(position); }
    const Gap& gap() const { return std::get<Gap>(position); }
    friend bool operator==(const QuotientClass&, const QuotientClass&) = default;
};

enum class Ordering { Less, Equal, Greater, Incomparable };

std::string to_string(Ordering o);
std::string to_string(const Gap& gap);

QuotientClass class_of(const Configuration& config, const ImHPoint& zeta);
bool same_class(const Configuration& config, const ImHPoint& zeta, const ImHPoint& eta);
Ordering compare(const Configuration& config, const QuotientClass& a, const QuotientClass& b);

/// Values of the gap's endpoints (-inf / +inf for sentinels).
std::pair<double, double> gap_bounds(const Configuration& config, const Gap& gap);
/// Whether `gap` is a gap of the fiber over z (adjacent points or sentinels).
bool is_valid_gap(const Configuration& config, Complex z, const Gap& gap);
/// The gap over z containing height 0 (the base section o). Throws
/// NotChartAdmissible if 0 is itself a fiber point.
Gap base_gap(const Configuration& config, Complex z);

/// A section of pi_lambda(Y_lambda) up to its combinatorial shadow: the gap
/// containing 0 on every fiber except finitely many deviations.
struct CombinatorialSection {
    std::map<Complex, Gap, ComplexLess> deviations;

    static CombinatorialSection base() { return {}; }
    static CombinatorialSection single(Complex z, const Gap& gap)
    {
        CombinatorialSection s;
        s.deviations.emplace(z, gap);
        return s;
    }
    friend bool operator==(const CombinatorialSection&, const CombinatorialSection&) = default;
};

Gap section_gap(const Configuration& config, const CombinatorialSection& s, Complex z);
/// Throws InvalidArgument naming the first invalid deviation.
void validate_section(const Configuration& config, const CombinatorialSection& s);
/// Whether the point's class lies on the section (fixed points never do).
bool on_section(const Configuration& config, const CombinatorialSection& s, const ImHPoint& zeta);

/// Finitely supported Z-valued function on C.
class IntegerDivisor {
public:
    IntegerDivisor() = default;

    int operator()(Complex z) const;
    void set(Complex z, int k);
    const std::map<Complex, int, ComplexLess>& support() const noexcept { return values_; }
    bool is_zero() const noexcept { return values_.empty(); }
    int degree() const;

    IntegerDivisor operator-() const;
    friend IntegerDivisor operator+(const IntegerDivisor& a, const IntegerDivisor& b);
    friend IntegerDivisor operator-(const IntegerDivisor& a, const IntegerDivisor& b) { return a + (-b); }
    friend bool operator==(const IntegerDivisor&, const IntegerDivisor&) = default;

private:
    std::map<Complex, int, ComplexLess> values_;
};

/// k_{s1,s2}(z): signed count of fiber points strictly between s1(z) and
/// s2(z), positive when s1 lies below s2. Restricted to |z| <= disk.
IntegerDivisor k_divisor(const Configuration& config, const CombinatorialSection& s1,
                         const CombinatorialSection& s2, double disk);

/// Signed count between two gaps of one fiber (the pointwise divisor).
std::int64_t gap_distance(const FiberView& fiber, const Configuration& config, const Gap& from, const Gap& to);

/// Continuity criterion for a candidate gap assignment: every assigned gap is
/// a gap of its fiber and the deviation support from `base` is finite in
/// the disk. Returns false for assignments that are not sections.
bool is_continuous(const Configuration& config, const CombinatorialSection& base,
                   const std::vector<std::pair<Complex, Gap>>& candidate, double disk);

}  // namespace ainf
