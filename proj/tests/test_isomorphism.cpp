#include <gtest/gtest.h>

#include <random>

#include "ainf/error.hpp"
#include "ainf/isomorphism.hpp"
#include "oracles.hpp"

using namespace ainf;

namespace {

const Configuration pl2 = Configuration::power_law(2.0);
const Configuration pl3 = Configuration::power_law(3.0);

std::vector<ImHPoint> random_centers(std::mt19937_64& rng, int count)
{
    const Complex bases[] = {{0, 0}, {1, 0}, {0, -2}};
    std::vector<ImHPoint> out;
    while (static_cast<int>(out.size()) < count) {
        const ImHPoint c{static_cast<double>(std::uniform_int_distribution<int>(-9, 9)(rng)),
                         bases[std::uniform_int_distribution<int>(0, 2)(rng)]};
        if (c.t != 0 && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    return out;
}

}  // namespace

TEST(IsomExists, Examples)
{
    EXPECT_TRUE(isom_exists(pl2, pl3, 100).isomorphic);
    const auto two = Configuration::finite({{1, 0}, {2, 0}});
    const auto cert = isom_exists(pl2, two, 100);
    EXPECT_FALSE(cert.isomorphic);
    EXPECT_NE(cert.obstruction.find("order types"), std::string::npos);
    const auto moved = Configuration::finite({{1, 0}, {2, {0, 3}}});
    EXPECT_FALSE(isom_exists(two, moved, 100).isomorphic);
}

TEST(IsomExists, PaperFamilyCertificate)
{
    const auto cert = isom_exists(pl2, pl3, 100);
    ASSERT_EQ(cert.fibers.size(), 1u);
    EXPECT_EQ(cert.fibers[0].source, OrderType::omega_down());
    EXPECT_TRUE(cert.fibers[0].matches);
    EXPECT_EQ(cert.shift, Complex(0, 0));
}

TEST(IsomExists, AgreesWithExhaustiveSearch)
{
    std::mt19937_64 rng(40);
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = random_centers(rng, 1 + trial % 8);
        std::vector<ImHPoint> b;
        switch (trial % 3) {
        case 0: b = random_centers(rng, 1 + (trial / 3) % 8); break;
        case 1:
            // same fibers, new heights: isomorphic unless a fiber count changes
            b = a;
            for (auto& c : b) c.t = c.t * 1.7 + 0.3;
            if (b.size() > 1 && rng() % 2) b.pop_back();
            break;
        default:
            b = a;
            b[rng() % b.size()].z += Complex(0, 5);
        }
        const auto ca = Configuration::finite(a), cb = Configuration::finite(b);
        EXPECT_EQ(isom_exists(ca, cb, 100).isomorphic, oracle::order_isomorphic(a, b)) << trial;
    }
}

TEST(IsomExists, Invariances)
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> U(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_centers(rng, 2 + trial % 7);
        auto permuted = a;
        std::shuffle(permuted.begin(), permuted.end(), rng);
        EXPECT_TRUE(isom_exists(Configuration::finite(a), Configuration::finite(permuted), 100).isomorphic);
        const ImHPoint eta{U(rng), {U(rng), U(rng)}};
        auto shifted = a;
        for (auto& c : shifted) c = c + eta;
        const auto cert = isom_exists(Configuration::finite(a), Configuration::finite(shifted), 100);
        EXPECT_TRUE(cert.isomorphic);
        EXPECT_NEAR(std::abs(cert.shift + eta.z), 0.0, 1e-12);
    }
}

TEST(IsomExists, Transitive)
{
    const auto a = Configuration::axial({-3, -1}, 1.0, 2.0);
    const auto c = Configuration::axial({-7}, 2.0, 1.5);
    EXPECT_TRUE(isom_exists(pl2, a, 100).isomorphic);
    EXPECT_TRUE(isom_exists(a, c, 100).isomorphic);
    EXPECT_TRUE(isom_exists(pl2, c, 100).isomorphic);
    // composition of canonical matchings is the canonical matching
    const auto hab = build_h(pl2, a, 100), hbc = build_h(a, c, 100), hac = build_h(pl2, c, 100);
    for (CenterIndex n = 1; n <= 30; ++n)
        EXPECT_EQ(hbc.map_point(0.0, hab.map_point(0.0, n).n).n, hac.map_point(0.0, n).n);
}

TEST(BuildH, PowerLaws)
{
    const auto h = build_h(pl2, pl3, 100);
    for (CenterIndex n = 1; n <= 50; ++n) {
        const auto p = h.map_point(0.0, n);
        EXPECT_EQ(p.n, n);
        EXPECT_EQ(p.value, -static_cast<double>(n * n * n));
    }
    const auto id = build_h(pl2, pl2, 100);
    EXPECT_EQ(id.map_gap(0.0, Gap{5, 4}), (Gap{5, 4}));
}

TEST(BuildH, FiniteMatching)
{
    const auto a = Configuration::finite({{1, 0}, {4, 0}});  // -1, -4
    const auto b = Configuration::finite({{2, 0}, {3, 0}});  // -2, -3
    const auto h = build_h(a, b, 10);
    EXPECT_EQ(h.map_point(0.0, 2).value, -3);  // -4 -> -3
    EXPECT_EQ(h.map_point(0.0, 1).value, -2);  // -1 -> -2
    EXPECT_EQ(h.map_gap(0.0, Gap{std::nullopt, 2}), (Gap{std::nullopt, 2}));
}

TEST(BuildH, OmegaBothAnchor)
{
    const auto up = PowerTail{0.0, -1, 1.0, 2.0, 1};    // points +m^2
    const auto down = PowerTail{0.0, 1, 1.0, 2.0, 1};   // points -m^2
    const std::vector<FiberDeclaration> both{{0.0, OrderType::omega_both()}};
    const auto a = Configuration::general({{-0.5, 0}}, {up, down}, both, 10);
    const auto b = Configuration::general({}, {up, down}, both, 10);
    const auto h = build_h(a, b, 10);
    // least nonnegative points: 0.5 and 1 are matched
    EXPECT_EQ(h.map_point(0.0, 1).value, 1.0);
    EXPECT_EQ(h.map_point(0.0, 2).value, 4.0);
}

TEST(BuildH, NotIsomorphic)
{
    try {
        (void)build_h(pl2, Configuration::finite({{1, 0}}), 10);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotIsomorphic);
    }
}

TEST(BuildPhi0, Examples)
{
    EXPECT_TRUE(build_phi0(build_h(pl2, pl3, 100)).divisor().is_zero());
    // a: points -2, -1 with o above both; b: points 1, 2 with o' below both,
    // so h(o) sits two points above o'
    const auto a = Configuration::finite({{1, 0}, {2, 0}});
    const auto b = Configuration::finite({{-1, 0}, {-2, 0}});
    const auto phi0 = build_phi0(build_h(a, b, 10));
    EXPECT_EQ(phi0.divisor()(0.0), 2);
    const Complex q(0.5, 0.5);
    EXPECT_LT(std::abs(phi0(q) - q * q), 1e-15);
}

TEST(ApplyH, Identity)
{
    const auto data = make_isomorphism(pl2, pl2, 100);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int i = 0; i < 20; ++i) {
        const ManifoldPoint x{{20 * U(rng), {U(rng), U(rng)}}, 3 * U(rng)};
        const auto y = apply_H(data, x);
        EXPECT_NEAR(y.zeta.t, x.zeta.t, 1e-10 * (1 + std::abs(x.zeta.t)));
        EXPECT_LT(std::abs(normalize_angle(y.theta - x.theta)), 1e-10);
    }
}

TEST(ApplyH, PowerLawsPreserveMomentAndOrder)
{
    const auto data = make_isomorphism(pl2, pl3, 100);
    for (double t : {-2.5, -6.0, -20.0, 0.5}) {
        const ManifoldPoint x{{t, 0.0}, 0.3};
        const auto y = apply_H(data, x);
        EXPECT_EQ(y.zeta.z, x.zeta.z);
        // the image lies in h of the source gap
        EXPECT_EQ(class_of(pl3, y.zeta), (QuotientClass{0.0, data.h.map_gap(0.0, class_of(pl2, x.zeta).gap())}));
    }
}

TEST(ApplyH, FixedPointInput)
{
    const auto data = make_isomorphism(pl2, pl3, 100);
    try {
        (void)apply_H(data, {{-4.0, 0.0}, 0.0});
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::FixedPointInput);
    }
}

TEST(ApplyH, ShiftedConfigsNeedTranslation)
{
    const auto a = Configuration::finite({{1, 0}, {2, 0}});
    const auto b = Configuration::finite({{1, {0, 1}}, {2, {0, 1}}});
    EXPECT_TRUE(isom_exists(a, b, 10).isomorphic);
    try {
        (void)make_isomorphism(a, b, 10);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotIsomorphic);
    }
}
