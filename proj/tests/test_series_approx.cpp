#include "arctan_cert/oracle.hpp"
#include "arctan_cert/series_approx.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace arctan_cert;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

std::vector<double> unit_grid(int count)
{
    std::vector<double> xs;
    for (int i = 0; i < count; ++i)
        xs.push_back(static_cast<double>(i) / (count - 1));
    return xs;
}

BigScalar oracle(double x)
{
    return oracle_arctan(x, OracleConfig{});
}

double err(double approx, double x)
{
    PrecisionScope scope(50);
    return BigScalar(BigScalar(approx) - oracle(x)).convert_to<double>();
}

double ulp_distance(double a, double b)
{
    if (a == b)
        return 0;
    return std::abs(a - b) / (std::max(std::abs(a), std::abs(b)) * std::numeric_limits<double>::epsilon());
}

} // namespace

TEST(ChebyshevT, Examples)
{
    EXPECT_EQ(chebyshev_T(0, 0.3), 1.0);
    EXPECT_NEAR(chebyshev_T(3, 0.5), -1.0, 1e-15);
    EXPECT_EQ(chebyshev_T(5, 1.0), 1.0);
    EXPECT_THROW(chebyshev_T(2, 1.5), std::domain_error);
}

TEST(ChebyshevT, MatchesTrigonometricDefinition)
{
    for (unsigned k = 0; k <= 64; ++k)
        for (int i = 0; i < 256; ++i) {
            const double x = -1 + 2.0 * i / 255;
            EXPECT_NEAR(chebyshev_T(k, x), std::cos(k * std::acos(x)), 1e-12) << k << " " << x;
        }
}

TEST(ChebArctan, Examples)
{
    EXPECT_EQ(cheb_arctan(3, 0.0), 0.0);
    EXPECT_NEAR(cheb_arctan(0, 1.0), 2 / (1 + kSqrt2), 1e-15);
    EXPECT_NEAR(cheb_arctan(5, -0.4), -cheb_arctan(5, 0.4), 1e-16);
    EXPECT_THROW(cheb_arctan(2, 1.01), std::domain_error);
}

TEST(ChebArctan, ClenshawMatchesDirectSum)
{
    for (unsigned n : {0u, 3u, 8u, 20u}) {
        const auto c = chebyshev_atan_coefficients(n, kSqrt2 - 1);
        for (double x : unit_grid(33)) {
            double direct = 0;
            for (unsigned k = 0; k <= n; ++k)
                direct += c[k] * chebyshev_T(2 * k + 1, x);
            EXPECT_NEAR(cheb_arctan(n, x), direct, 1e-15);
        }
    }
}

TEST(ChebArctan, CoefficientsAlternateAndShrink)
{
    const auto c = chebyshev_atan_coefficients(10, kSqrt2 - 1);
    for (std::size_t k = 1; k < c.size(); ++k) {
        EXPECT_LT(std::abs(c[k]), std::abs(c[k - 1]));
        EXPECT_LT(c[k] * c[k - 1], 0);
    }
}

TEST(ChebArctan, ScaledExamples)
{
    for (double x : {0.1, 0.5, 0.9})
        EXPECT_NEAR(cheb_arctan_scaled(6, 1.0, x), cheb_arctan(6, x), 1e-15);
    EXPECT_NEAR(cheb_arctan_scaled(20, 2.0, 0.5), kPi / 4, 1e-8);
    EXPECT_NEAR(cheb_arctan_scaled(30, 5.0, 0.1), 0.4636476090008061162, 1e-6);
    EXPECT_THROW(cheb_arctan_scaled(3, 2.0, 1.0), std::domain_error);
    EXPECT_THROW(cheb_arctan_scaled(3, -1.0, 0.5), std::domain_error);
}

TEST(ChebArctan, LiftedExamples)
{
    EXPECT_EQ(cheb_lifted(4, 0.0), 0.0);
    EXPECT_LT(std::abs(err(cheb_lifted(4, 1e3), 1e3)), std::pow(3 + 2 * kSqrt2, -4));
    EXPECT_LT(std::abs(err(cheb_lifted(8, 1.0), 1.0)), std::pow(3 + 2 * kSqrt2, -8));
}

TEST(ContinuedFraction, Convergents)
{
    EXPECT_DOUBLE_EQ(cf_arctan(1, 1.0), 0.75);
    EXPECT_DOUBLE_EQ(cf_arctan(2, 1.0), 19.0 / 24);
    EXPECT_DOUBLE_EQ(cf_arctan(3, 1.0), 160.0 / 204);
    EXPECT_THROW(cf_arctan(0, 1.0), std::domain_error);
}

TEST(ContinuedFraction, ClosedFormsWithinFourUlp)
{
    for (int i = 0; i < 1024; ++i) {
        const double x = i / 1023.0;
        const double x2 = x * x;
        const double k1 = x / (1 + x2 / 3);
        const double k2 = x * (15 + 4 * x2) / (15 + 9 * x2);
        const double k3 = 5 * x * (21 + 11 * x2) / (105 + 90 * x2 + 9 * x2 * x2);
        EXPECT_LE(ulp_distance(cf_arctan(1, x), k1), 4) << x;
        EXPECT_LE(ulp_distance(cf_arctan(2, x), k2), 4) << x;
        EXPECT_LE(ulp_distance(cf_arctan(3, x), k3), 4) << x;
    }
}

TEST(ContinuedFraction, Lifted)
{
    EXPECT_EQ(cf_lifted(3, 0.0), 0.0);
    EXPECT_LT(std::abs(err(cf_lifted(3, 5.0), 5.0)), std::pow(4.0, -3));
    EXPECT_NEAR(oracle(5.0).convert_to<double>(), 1.3734007669450158609, 1e-16);
}

TEST(TaylorAtOne, SValues)
{
    EXPECT_EQ(taylor1_s(4, 0.0), 0.0);
    EXPECT_NEAR(taylor1_s(0, 1.0), 5.0 / 6, 1e-16);
    EXPECT_GT(taylor1_s(0, 1.0), kPi / 4);
    EXPECT_LT(taylor1_s(1, 1.0), kPi / 4);
    EXPECT_THROW(taylor1_s(1, 1.2), std::domain_error);
}

TEST(TaylorAtOne, TValues)
{
    EXPECT_NEAR(taylor1_t(3, 1.0), kPi / 4, 1e-16);
    EXPECT_LT(std::abs(taylor1_t(2, 0.0)), 1.0 / 16);
    for (unsigned n = 0; n <= 6; ++n)
        for (double u : unit_grid(101)) {
            EXPECT_NEAR(taylor1_t(n, u), taylor1_t_composed(n, u), 1e-12);
            EXPECT_NEAR(taylor1_t(n, u), kPi / 4 - taylor1_s(n, (1 - u) / (1 + u)), 1e-12);
        }
    EXPECT_THROW(taylor1_t(1, -0.2), std::domain_error);
}

TEST(TaylorAtOne, BoundDirections)
{
    PrecisionScope scope(50);
    // gaps below 1e-40 are under the oracle's rounding
    const BigScalar tol("1e-40");
    for (unsigned n = 0; n <= 5; ++n)
        for (double ud : unit_grid(257)) {
            if (ud == 0 || ud == 1)
                continue;
            const BigScalar u(ud);
            const BigScalar a = oracle(ud);
            const BigScalar s = taylor1_s(n, u);
            const BigScalar t = taylor1_t(n, u);
            // s_n is an upper bound for even n; t_n reflects it and flips the side
            if (n % 2 == 0) {
                EXPECT_GE(s, a - tol) << n << " " << ud;
                EXPECT_LE(t, a + tol) << n << " " << ud;
            } else {
                EXPECT_LE(s, a + tol) << n << " " << ud;
                EXPECT_GE(t, a - tol) << n << " " << ud;
            }
        }
}

TEST(TaylorAtOne, Envelopes)
{
    PrecisionScope scope(50);
    for (unsigned n = 1; n <= 5; ++n)
        for (double ud : unit_grid(257)) {
            const BigScalar u(ud);
            const BigScalar a = oracle(ud);
            const double es = BigScalar(abs(taylor1_s(n, u) - a)).convert_to<double>();
            const double et = BigScalar(abs(taylor1_t(n, u) - a)).convert_to<double>();
            EXPECT_LE(es, std::pow(kSqrt2 * ud / (ud + 1), 4.0 * n) + 1e-30) << n << " " << ud;
            EXPECT_LE(et, std::pow((1 - ud) / kSqrt2, 4.0 * n) + 1e-30) << n << " " << ud;
        }
}

TEST(Blend, EndpointsAndConvexity)
{
    for (unsigned n = 0; n <= 6; ++n) {
        EXPECT_EQ(blend_w(n, 0.0), 0.0);
        EXPECT_NEAR(blend_w(n, 1.0), kPi / 4, 1e-16);
        for (double u : unit_grid(101)) {
            const double s = taylor1_s(n, u);
            const double t = taylor1_t(n, u);
            const double w = blend_w(n, u);
            EXPECT_GE(w, std::min(s, t) - 1e-16);
            EXPECT_LE(w, std::max(s, t) + 1e-16);
        }
    }
}

TEST(Blend, Lifted)
{
    EXPECT_EQ(blend_w_lifted(2, 0.0), 0.0);
    EXPECT_LT(std::abs(err(blend_w_lifted(2, 3.0), 3.0)), 2 * std::pow(20.0, -2));
    PrecisionScope scope(50);
    const BigScalar big(1e6);
    EXPECT_LT(BigScalar(abs(blend_w_lifted(4, big) - oracle(1e6))).convert_to<double>(), 1e-8);
}

TEST(RecipSeries, Examples)
{
    EXPECT_NEAR(arctan_recip_series(5.0, 3), 0.19739555984988075837, 1e-8);
    EXPECT_NEAR(arctan_recip_series(239.0, 1), 0.0041840760020747238645, 1e-15);
    EXPECT_NEAR(arctan_recip_series(1.0, 10), kPi / 4, std::pow(0.25, 10));
    EXPECT_THROW(arctan_recip_series(0.5, 2), std::domain_error);
}

TEST(Machin, RationalFirstRow)
{
    EXPECT_EQ(machin_pi_rational(1), Rational(5432413, 1728000));
    EXPECT_THROW(machin_pi_rational(0), std::domain_error);
}

TEST(Machin, ConvergesMonotonically)
{
    PrecisionScope scope(60);
    const BigScalar& p = pi_big(60);
    double prev = 1;
    for (unsigned terms = 1; terms <= 10; ++terms) {
        const double e = BigScalar(abs(machin_pi(terms, 60) - p)).convert_to<double>();
        EXPECT_LT(e, prev) << terms;
        prev = e;
    }
    EXPECT_LT(prev, 1e-20);
    EXPECT_LT(BigScalar(abs(machin_pi(12, 60) - p)).convert_to<double>(), 1e-25);
}

TEST(Machin, AgreesWithOracleArctans)
{
    PrecisionScope scope(60);
    OracleConfig cfg;
    cfg.working_digits = 60;
    const BigScalar via_oracle =
        16 * oracle_arctan(BigScalar(1) / 5, cfg) - 4 * oracle_arctan(BigScalar(1) / 239, cfg);
    EXPECT_LT(BigScalar(abs(machin_pi(30, 60) - via_oracle)).convert_to<double>(), 1e-50);
}
