#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ainf/charts.hpp"

namespace ainf {

struct FiberCertificate {
    Complex z;
    Complex target_z;
    OrderType source;
    OrderType target;
    bool matches = false;
};

struct IsomCertificate {
    bool isomorphic = false;
    std::vector<Complex> delta_source;
    std::vector<Complex> delta_target;
    std::vector<FiberCertificate> fibers;
    /// Constant c with mu'_C o H = mu_C + c. Zero when Isom(source, target)
    /// itself is nonempty.
    Complex shift{0.0, 0.0};
    std::string obstruction;  // empty when isomorphic
};

/// Delta sets agree on the disk and every pair of fibers has the same order
/// type (order-preserving matchings only). When that fails and both Delta
/// sets are finite, retries with Delta' = Delta + c for the translation c
/// taking the least point (lexicographic) of Delta to that of Delta'.
IsomCertificate isom_exists(const Configuration& source, const Configuration& target, double disk);

/// Canonical increasing matching of every fiber of `source` with the fiber
/// of `target` over the same base point, restricted to the disk.
/// Finite and OmegaUp fibers are matched from the bottom, OmegaDown from the
/// top and OmegaBoth at the least nonnegative points.
class OrderIso {
public:
    OrderIso(const Configuration& source, const Configuration& target, double disk);

    const Configuration& source() const noexcept { return source_; }
    const Configuration& target() const noexcept { return target_; }
    double disk() const noexcept { return disk_; }
    std::vector<Complex> bases() const;

    /// Image of the source point with index n over z.
    FiberPoint map_point(Complex z, CenterIndex n) const;
    /// Image of a gap; sentinels map to sentinels.
    Gap map_gap(Complex z, const Gap& gap) const;
    /// h(s) as a section of the target (deviations from o_target).
    CombinatorialSection map_section(const CombinatorialSection& s) const;

private:
    struct Anchor {
        FiberPoint source;
        FiberPoint target;
    };

    Configuration source_;
    Configuration target_;
    double disk_;
    std::map<Complex, Anchor, ComplexLess> anchors_;
};

/// Throws NotIsomorphic with the first obstruction, including the case of a
/// nonzero shift (translate the target's complex parts first).
OrderIso build_h(const Configuration& source, const Configuration& target, double disk);

/// prod (q - z)^{k(z)} with k = k_{o_target, h(o_source)} on the disk.
Multiplier build_phi0(const OrderIso& h);

struct IsomorphismData {
    OrderIso h;
    Multiplier phi0;
};

IsomorphismData make_isomorphism(const Configuration& source, const Configuration& target, double disk);

/// H(h, phi0) through the chart of the section that deviates from o only at
/// the point's own fiber (canonical multiplier). Throws FixedPointInput on
/// centers and InvalidArgument when |q| exceeds the disk.
ManifoldPoint apply_H(const IsomorphismData& data, const ManifoldPoint& x, double eps = 1e-12);
/// The same map through an explicit covering section and multiplier unit
/// exp(P); the result does not depend on either.
ManifoldPoint apply_H(const IsomorphismData& data, const ManifoldPoint& x, const CombinatorialSection& s,
                      const std::vector<Complex>& unit = {}, double eps = 1e-12);

}  // namespace ainf
