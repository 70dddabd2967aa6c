#include "arctan_cert/approx_core.hpp"
#include "arctan_cert/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace arctan_cert;

namespace {

constexpr double kPi = std::numbers::pi;

// reference values from an independent 40-digit mpmath evaluation
constexpr double kSfLower1 = 0.78361162489122432754;
constexpr double kSfUpper1 = 0.82059617467527703651;
constexpr double kRefinedDen1 = 57.295296250282619184;
constexpr double kRefinedUpper1 = 0.78540478791534356609;
constexpr double kRefinedLower1 = 0.78484351088095644254;
constexpr double kRadical1 = 0.80836263964694237129;

std::vector<double> log_grid(double lo, double hi, int count)
{
    std::vector<double> xs;
    for (int i = 0; i < count; ++i)
        xs.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
    return xs;
}

BigScalar oracle(double x)
{
    static const OracleConfig cfg;
    return oracle_arctan(x, cfg);
}

} // namespace

TEST(ShaferFink, ValuesAtZeroAndOne)
{
    const auto b0 = shafer_fink_bounds(0.0);
    EXPECT_EQ(b0.lower, 0.0);
    EXPECT_EQ(b0.upper, 0.0);
    const auto b1 = shafer_fink_bounds(1.0);
    EXPECT_NEAR(b1.lower, kSfLower1, 1e-15);
    EXPECT_NEAR(b1.upper, kSfUpper1, 1e-15);
    EXPECT_LT(b1.lower, kPi / 4);
    EXPECT_GT(b1.upper, kPi / 4);
}

TEST(ShaferFink, RejectsBadInput)
{
    EXPECT_THROW(shafer_fink_bounds(-1.0), std::domain_error);
    EXPECT_THROW(shafer_fink_bounds(std::nan("")), std::domain_error);
}

TEST(ShaferFink, LargeArgumentsDoNotOverflow)
{
    const auto b = shafer_fink_bounds(1e300);
    EXPECT_NEAR(b.lower, 1.5, 1e-12);
    EXPECT_NEAR(b.upper, kPi / 2, 1e-12);
}

TEST(NestedRadical, Examples)
{
    EXPECT_EQ(nested_radical(0, 3.7), 1.0);
    EXPECT_NEAR(nested_radical(1, 1.0), 1 + std::numbers::sqrt2, 1e-15);
    EXPECT_EQ(nested_radical(2, 0.0), 4.0);
    const auto all = nested_radicals(3, 0.0);
    ASSERT_EQ(all.size(), 4u);
    EXPECT_EQ(all[3], 8.0);
}

TEST(NestedRadical, MatchesCotangentBisection)
{
    PrecisionScope scope(50);
    for (double x : log_grid(1e-3, 1e3, 61)) {
        const BigScalar bx(x);
        const BigScalar a = oracle(x);
        for (unsigned j = 0; j <= 10; ++j) {
            const BigScalar expected = bx / tan(BigScalar(ldexp(a, -static_cast<int>(j))));
            const BigScalar got = nested_radical(j, bx);
            EXPECT_LT(BigScalar(abs(got - expected) / expected).convert_to<double>(), 1e-12)
                << "j=" << j << " x=" << x;
        }
    }
}

TEST(RefinedShaferFink, ValuesAtOne)
{
    EXPECT_NEAR(refined_shafer_fink_denominator(1.0), kRefinedDen1, 1e-12);
    const auto b = refined_shafer_fink_bounds(1.0);
    EXPECT_NEAR(b.upper, kRefinedUpper1, 1e-15);
    EXPECT_NEAR(b.lower, kRefinedLower1, 1e-15);
    EXPECT_GT(b.upper, kPi / 4);
    EXPECT_LT(b.lower, kPi / 4);
    const auto b0 = refined_shafer_fink_bounds(0.0);
    EXPECT_EQ(b0.lower, 0.0);
    EXPECT_EQ(b0.upper, 0.0);
    EXPECT_THROW(refined_shafer_fink_bounds(-0.5), std::domain_error);
}

TEST(RadicalUpper, Values)
{
    EXPECT_EQ(radical_upper_bound(0.0), 0.0);
    EXPECT_NEAR(radical_upper_bound(1.0), kRadical1, 1e-15);
    const double big = radical_upper_bound(1e6);
    EXPECT_LT(std::abs(big - kPi / 2), 1e-5);
    EXPECT_GT(BigScalar(radical_upper_bound(BigScalar(1e6)) - oracle(1e6)).convert_to<double>(), 0.0);
    EXPECT_THROW(radical_upper_bound(-1.0), std::domain_error);
}

TEST(Sandwich, LogGridAgainstOracle)
{
    PrecisionScope scope(50);
    for (double x : log_grid(1e-6, 1e6, 10001)) {
        const BigScalar bx(x);
        const BigScalar a = oracle(x);
        const auto sf = shafer_fink_bounds(bx);
        const auto t2 = refined_shafer_fink_bounds(bx);
        ASSERT_LT(sf.lower, a) << x;
        ASSERT_GT(sf.upper, a) << x;
        ASSERT_LT(t2.lower, a) << x;
        ASSERT_GT(t2.upper, a) << x;
        ASSERT_GT(radical_upper_bound(bx), a) << x;
    }
}

TEST(Sandwich, RefinedTighterAwayFromCrossovers)
{
    // lower sides cross at x = 0.672967..., upper sides at x = 194.1693...
    for (double x : log_grid(1e-4, 1e4, 2001)) {
        const auto sf = shafer_fink_bounds(x);
        const auto t2 = refined_shafer_fink_bounds(x);
        if (x >= 0.673)
            EXPECT_GE(t2.lower, sf.lower) << x;
        if (x <= 0.672)
            EXPECT_LT(t2.lower, sf.lower) << x;
        if (x <= 194.1)
            EXPECT_LE(t2.upper, sf.upper) << x;
        if (x >= 194.2)
            EXPECT_GT(t2.upper, sf.upper) << x;
    }
}

TEST(Lagrange, InterpolationNodes)
{
    EXPECT_EQ(lagrange_p(0.0), 0.0);
    EXPECT_NEAR(lagrange_p(std::numbers::sqrt2 - 1), kPi / 8, 1e-15);
    EXPECT_NEAR(lagrange_p(1.0), kPi / 4, 1e-15);
    EXPECT_THROW(lagrange_p(1.5), std::domain_error);
    EXPECT_THROW(lagrange_p(-0.1), std::domain_error);
}

TEST(LiftedLagrange, ClosedFormMatchesLift)
{
    EXPECT_EQ(lifted_lagrange(0.0), 0.0);
    EXPECT_LT(std::abs(lifted_lagrange(1.0) - kPi / 4), 1.0 / 115);
    for (double x : {0.5, 1.0, 2.0, 100.0, 1e6}) {
        const double lifted = lift([](double u) { return lagrange_p(u); }, x);
        EXPECT_LT(std::abs(lifted_lagrange(x) - lifted), 1e-12) << x;
    }
    EXPECT_THROW(lifted_lagrange(-2.0), std::domain_error);
}

TEST(Lift, OracleIsExact)
{
    PrecisionScope scope(50);
    const OracleConfig cfg;
    auto f = [&](const BigScalar& u) { return oracle_arctan(u, cfg); };
    for (double x : {1e-5, 0.3, 1.0, 7.0, 1e5}) {
        const BigScalar lifted = lift(f, BigScalar(x));
        EXPECT_LT(BigScalar(abs(lifted - oracle(x))).convert_to<double>(), 1e-30) << x;
    }
    EXPECT_EQ(lift([](double u) { return u + 0.25; }, 0.0), 0.5);
}

TEST(Lift, RepeatedLiftKeepsArgumentBounded)
{
    std::vector<double> seen;
    auto probe = [&](double u) {
        seen.push_back(u);
        return std::atan(u);
    };
    const double v = lift_n(probe, 1e12, 3);
    ASSERT_EQ(seen.size(), 1u);
    EXPECT_LT(seen[0], 1.0);
    EXPECT_NEAR(v, std::atan(1e12), 1e-14);
}

TEST(LiftIntervalMap, Examples)
{
    EXPECT_NEAR(lift_interval_map(std::numbers::sqrt2 - 1), 1.0, 1e-15);
    EXPECT_NEAR(lift_interval_map(0.5), 4.0 / 3, 1e-15);
    EXPECT_NEAR(lift_interval_map(1e-9) / 2e-9, 1.0, 1e-12);
    EXPECT_THROW(lift_interval_map(1.0), std::domain_error);
    EXPECT_THROW(lift_interval_map(0.0), std::domain_error);
}
