#include <gtest/gtest.h>

#include <random>

#include "ainf/error.hpp"
#include "ainf/quotient.hpp"
#include "oracles.hpp"

using namespace ainf;

namespace {

const Configuration pl = Configuration::power_law(2.0);

/// Centers on a few fibers with small integer heights.
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

CombinatorialSection random_section(std::mt19937_64& rng, const Configuration& c)
{
    CombinatorialSection s;
    for (Complex z : delta_set(c, 10)) {
        if (rng() % 2) continue;
        const auto cl = class_of(c, {std::uniform_real_distribution<double>(-11, 11)(rng), z});
        if (!cl.is_fixed()) s.deviations.emplace(z, cl.gap());
    }
    return s;
}

}  // namespace

TEST(ClassOf, Examples)
{
    const auto a = class_of(pl, {-2.5, 0.0});
    ASSERT_FALSE(a.is_fixed());
    EXPECT_EQ(a.gap(), (Gap{2, 1}));
    const auto b = class_of(pl, {-4.0, 0.0});
    ASSERT_TRUE(b.is_fixed());
    EXPECT_EQ(std::get<FixedClass>(b.position).n, 2);
    const auto c = class_of(pl, {7.0, 1.0});
    EXPECT_EQ(c.gap(), (Gap{std::nullopt, std::nullopt}));
    const auto top = class_of(pl, {0.0, 0.0});
    EXPECT_EQ(top.gap(), (Gap{1, std::nullopt}));
}

TEST(SameClass, Examples)
{
    EXPECT_TRUE(same_class(pl, {-2.5, 0.0}, {-2.5, 0.0}));
    EXPECT_TRUE(same_class(pl, {-2.5, 0.0}, {-3.9, 0.0}));
    EXPECT_FALSE(same_class(pl, {-2.5, 0.0}, {-0.5, 0.0}));
    EXPECT_TRUE(same_class(pl, {-4.0, 0.0}, {-4.0, 0.0}));
    EXPECT_FALSE(same_class(pl, {-4.0, 0.0}, {-3.0, 0.0}));
    EXPECT_FALSE(same_class(pl, {-2.5, 0.0}, {-2.5, 1.0}));
}

TEST(SameClass, BruteForce)
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> U(-10, 10);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto centers = random_centers(rng, 1 + trial % 8);
        const auto c = Configuration::finite(centers);
        const Complex z = centers[rng() % centers.size()].z * -1.0;
        // snap some endpoints onto centers to exercise the fixed classes
        auto pick = [&] { return rng() % 5 == 0 ? std::round(U(rng)) : U(rng); };
        const ImHPoint x{pick(), z}, y{pick(), rng() % 10 == 0 ? z + 1.0 : z};
        EXPECT_EQ(same_class(c, x, y), oracle::same_class(centers, x, y)) << trial;
    }
}

TEST(Compare, Examples)
{
    const auto fixed2 = class_of(pl, {-4.0, 0.0});
    const auto gap = class_of(pl, {-2.5, 0.0});
    EXPECT_EQ(compare(pl, gap, gap), Ordering::Equal);
    EXPECT_EQ(compare(pl, fixed2, gap), Ordering::Less);
    EXPECT_EQ(compare(pl, gap, fixed2), Ordering::Greater);
    EXPECT_EQ(compare(pl, gap, class_of(pl, {3.0, 1.0})), Ordering::Incomparable);
}

TEST(Compare, StrictPartialOrder)
{
    std::vector<QuotientClass> classes;
    for (double t : {-30.0, -25.0, -17.0, -16.0, -12.0, -9.0, -5.0, -4.0, -2.0, -1.0, 0.0, 3.0})
        classes.push_back(class_of(pl, {t, 0.0}));
    classes.push_back(class_of(pl, {0.0, {1, 1}}));
    for (const auto& a : classes) {
        EXPECT_EQ(compare(pl, a, a), Ordering::Equal);
        for (const auto& b : classes) {
            const auto ab = compare(pl, a, b);
            EXPECT_EQ(ab == Ordering::Incomparable, a.z != b.z);
            if (ab == Ordering::Less) EXPECT_EQ(compare(pl, b, a), Ordering::Greater);
            for (const auto& c : classes)
                if (ab == Ordering::Less && compare(pl, b, c) == Ordering::Less)
                    EXPECT_EQ(compare(pl, a, c), Ordering::Less);
        }
    }
}

TEST(KDivisor, Examples)
{
    const auto o = CombinatorialSection::base();
    EXPECT_TRUE(k_divisor(pl, o, o, 100).is_zero());
    const auto s = CombinatorialSection::single(0.0, class_of(pl, {-5.0, 0.0}).gap());
    const auto k = k_divisor(pl, o, s, 100);
    EXPECT_EQ(k(0.0), -2);
    EXPECT_EQ(k.degree(), -2);
    EXPECT_EQ(k_divisor(pl, s, o, 100), -k);
}

TEST(KDivisor, CountsOnFiniteConfig)
{
    const auto c = Configuration::finite({{1, 0}, {-3, 0}, {2, 0}});  // fiber points -2, -1, 3
    const auto below = CombinatorialSection::single(0.0, Gap{std::nullopt, 3});  // (-inf, -2)
    const auto above = CombinatorialSection::single(0.0, Gap{2, std::nullopt});  // (3, inf)
    EXPECT_EQ(k_divisor(c, below, above, 10)(0.0), 3);
    EXPECT_EQ(k_divisor(c, CombinatorialSection::base(), above, 10)(0.0), 1);
    EXPECT_EQ(k_divisor(c, CombinatorialSection::base(), below, 10)(0.0), -2);
}

TEST(KDivisor, CocycleAndAntisymmetry)
{
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto c = Configuration::finite(random_centers(rng, 1 + trial % 8));
        const auto s1 = random_section(rng, c), s2 = random_section(rng, c), s3 = random_section(rng, c);
        const auto k12 = k_divisor(c, s1, s2, 10), k23 = k_divisor(c, s2, s3, 10);
        EXPECT_EQ(k_divisor(c, s1, s3, 10), k12 + k23);
        EXPECT_EQ(k_divisor(c, s2, s1, 10), -k12);
    }
}

TEST(KDivisor, PowerLawFarGaps)
{
    const auto o = CombinatorialSection::base();
    const auto s = CombinatorialSection::single(0.0, Gap{1001, 1000});
    EXPECT_EQ(k_divisor(pl, o, s, 100)(0.0), -1000);
}

TEST(Sections, Validation)
{
    EXPECT_NO_THROW(validate_section(pl, CombinatorialSection::single(0.0, Gap{3, 2})));
    try {
        validate_section(pl, CombinatorialSection::single(0.0, Gap{3, 1}));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
    }
    EXPECT_TRUE(on_section(pl, CombinatorialSection::base(), {-0.5, 0.0}));
    EXPECT_FALSE(on_section(pl, CombinatorialSection::base(), {-1.5, 0.0}));
    EXPECT_FALSE(on_section(pl, CombinatorialSection::base(), {-1.0, 0.0}));
    EXPECT_TRUE(on_section(pl, CombinatorialSection::base(), {-1.5, 2.0}));
}

TEST(Continuity, FiniteDeviations)
{
    const auto o = CombinatorialSection::base();
    EXPECT_TRUE(is_continuous(pl, o, {{0.0, Gap{3, 2}}}, 100));
    EXPECT_TRUE(is_continuous(pl, o, {{{1, 1}, Gap{}}}, 100));
    EXPECT_FALSE(is_continuous(pl, o, {{0.0, Gap{3, 1}}}, 100));
    EXPECT_FALSE(is_continuous(pl, o, {{0.0, Gap{3, 2}}, {0.0, Gap{2, 1}}}, 100));
}

TEST(Continuity, GeneralBeyondWorkingRadius)
{
    const auto c = Configuration::general({{1, {1, 0}}}, {}, {{-1.0, OrderType::finite(1)}}, 5.0);
    try {
        (void)is_continuous(c, CombinatorialSection::base(), {}, 50);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TailUnresolved);
    }
}
