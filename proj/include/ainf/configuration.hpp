#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ainf/types.hpp"

namespace ainf {

enum class Family { PowerLaw, FiniteList, AxialMonotone, GeneralAxialFibered };

std::string_view to_string(Family family) noexcept;

/// Order type of a discrete closed subset of R (a fiber).
/// OmegaDown: bounded above, unbounded below. OmegaUp: the mirror image.
/// OmegaBoth: unbounded in both directions.
enum class OrderKind { Finite, OmegaUp, OmegaDown, OmegaBoth };

struct OrderType {
    OrderKind kind = OrderKind::Finite;
    std::int64_t count = 0;  // only meaningful for Finite

    static OrderType finite(std::int64_t k) { return {OrderKind::Finite, k}; }
    static OrderType omega_up() { return {OrderKind::OmegaUp, 0}; }
    static OrderType omega_down() { return {OrderKind::OmegaDown, 0}; }
    static OrderType omega_both() { return {OrderKind::OmegaBoth, 0}; }

    bool unbounded_below() const noexcept
    {
        return kind == OrderKind::OmegaDown || kind == OrderKind::OmegaBoth;
    }
    bool unbounded_above() const noexcept
    {
        return kind == OrderKind::OmegaUp || kind == OrderKind::OmegaBoth;
    }

    friend bool operator==(const OrderType& a, const OrderType& b) noexcept
    {
        return a.kind == b.kind && (a.kind != OrderKind::Finite || a.count == b.count);
    }
};

std::string to_string(const OrderType& type);

/// Centers (sign * scale * m^exponent, base) for m = first, first+1, ...
/// `base` is the shared lambda_C; `sign` is the sign of lambda_R.
struct PowerTail {
    Complex base{0.0, 0.0};
    int sign = 1;
    double scale = 1.0;
    double exponent = 2.0;
    std::int64_t first = 1;

    double magnitude(std::int64_t m) const { return scale * std::pow(static_cast<double>(m), exponent); }
    ImHPoint center(std::int64_t m) const { return {sign * magnitude(m), base}; }
};

/// Declared asymptotic order type of the fiber over `z` (a point of Delta,
/// i.e. z = -lambda_C). Only used by the general family.
struct FiberDeclaration {
    Complex z{0.0, 0.0};
    OrderType asymptotic;
};

/// A center configuration lambda. Finitely many explicit centers plus any
/// number of power-law tails; the index set is realised as the explicit
/// centers 1..K followed by the tails interleaved round-robin.
///
/// Immutable and cheap to copy.
class Configuration {
public:
    static constexpr std::int64_t default_truncation = 10000;

    static Configuration power_law(double beta, std::int64_t truncation = default_truncation);
    static Configuration finite(std::vector<ImHPoint> centers);
    /// lambda_n = a_n i with a_n = prefix[n-1] for n <= K and scale * n^exponent beyond.
    static Configuration axial(std::vector<double> prefix, double scale, double exponent,
                               std::int64_t truncation = default_truncation);
    static Configuration general(std::vector<ImHPoint> centers, std::vector<PowerTail> tails,
                                 std::vector<FiberDeclaration> fibers, double working_radius,
                                 std::int64_t truncation = default_truncation);

    Family family() const noexcept { return data_->family; }
    double beta() const;
    std::int64_t truncation() const noexcept { return data_->truncation; }
    Configuration with_truncation(std::int64_t truncation) const;

    bool is_finite() const noexcept { return data_->tails.empty(); }
    /// Number of centers for finite configurations.
    std::optional<std::int64_t> size() const noexcept;

    std::int64_t explicit_count() const noexcept { return static_cast<std::int64_t>(data_->centers.size()); }
    std::span<const ImHPoint> explicit_centers() const noexcept { return data_->centers; }
    std::span<const PowerTail> tails() const noexcept { return data_->tails; }
    std::span<const FiberDeclaration> declarations() const noexcept { return data_->fibers; }
    double working_radius() const noexcept { return data_->working_radius; }

    /// lambda_n for any n >= 1 (n <= size() when finite).
    ImHPoint center(CenterIndex n) const;

    CenterIndex tail_index(std::size_t tail, std::int64_t m) const noexcept;
    /// First term m of `tail` whose index exceeds n.
    std::int64_t tail_start(std::size_t tail, CenterIndex n) const noexcept;
    /// Index of the first center not covered by enumerating every tail up to
    /// (but excluding) the given starts. Inverse of tail_start in the sense
    /// that the result N satisfies tail_start(j, N) >= starts[j].
    CenterIndex covering_truncation(std::span<const std::int64_t> starts) const noexcept;

    /// Visits (n, lambda_n) for from < n <= to: explicit centers first, then
    /// each tail in order.
    template <class Visit>
    void for_each_center(CenterIndex from, CenterIndex to, Visit&& visit) const
    {
        const auto& d = *data_;
        const std::int64_t k = explicit_count();
        for (CenterIndex n = std::max<CenterIndex>(from, 0) + 1; n <= std::min(to, k); ++n)
            visit(n, d.centers[static_cast<std::size_t>(n - 1)]);
        for (std::size_t j = 0; j < d.tails.size(); ++j) {
            const auto& tail = d.tails[j];
            const std::int64_t m_end = tail_start(j, to);
            for (std::int64_t m = tail_start(j, from); m < m_end; ++m)
                visit(tail_index(j, m), tail.center(m));
        }
    }

    /// Stable textual form used for digests in run manifests.
    std::string canonical_string() const;

private:
    struct Data {
        Family family = Family::FiniteList;
        double beta = 0.0;
        std::int64_t truncation = default_truncation;
        std::vector<ImHPoint> centers;
        std::vector<PowerTail> tails;
        std::vector<FiberDeclaration> fibers;
        double working_radius = 0.0;
    };

    explicit Configuration(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    std::shared_ptr<const Data> data_;
};

}  // namespace ainf
