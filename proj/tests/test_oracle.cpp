#include "arctan_cert/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <limits>

using namespace arctan_cert;

namespace {

struct EnvGuard {
    explicit EnvGuard(const char* value)
    {
        if (value)
            setenv("ARCTAN_CERT_DIGITS", value, 1);
        else
            unsetenv("ARCTAN_CERT_DIGITS");
    }
    ~EnvGuard() { unsetenv("ARCTAN_CERT_DIGITS"); }
};

} // namespace

TEST(Oracle, QuarterPi)
{
    PrecisionScope scope(50);
    const BigScalar v = oracle_arctan(1.0, OracleConfig{});
    const BigScalar ref("0.78539816339744830961566084581987572104929234984378");
    EXPECT_LT(BigScalar(abs(v - ref)).convert_to<double>(), 1e-45);
}

TEST(Oracle, SpecialArguments)
{
    PrecisionScope scope(50);
    const OracleConfig cfg;
    EXPECT_EQ(oracle_arctan(0.0, cfg), 0);
    const BigScalar half_pi = oracle_arctan(std::numeric_limits<double>::infinity(), cfg);
    EXPECT_LT(BigScalar(abs(half_pi - pi_big(50) / 2)).convert_to<double>(), 1e-48);
    EXPECT_THROW(oracle_arctan(-1.0, cfg), std::domain_error);
    EXPECT_THROW(oracle_arctan(std::nan(""), cfg), std::domain_error);
}

TEST(Oracle, BisectionIdentity)
{
    PrecisionScope scope(50);
    const OracleConfig cfg;
    for (double xd : {0.3, 1.0, 7.0, 1e5}) {
        const BigScalar x(xd);
        const BigScalar half = x / (1 + sqrt(1 + x * x));
        const BigScalar r = 2 * oracle_arctan(half, cfg) - oracle_arctan(x, cfg);
        EXPECT_LT(BigScalar(abs(r)).convert_to<double>(), std::pow(10.0, -static_cast<double>(cfg.report_digits) + 2));
    }
}

TEST(Oracle, SelfAgreementAcrossPrecisions)
{
    OracleConfig lo;
    lo.working_digits = 40;
    OracleConfig hi;
    hi.working_digits = 60;
    for (int i = 1; i <= 100; ++i) {
        const double x = std::pow(10.0, -4 + 8.0 * i / 100);
        PrecisionScope scope(60);
        BigScalar a;
        {
            PrecisionScope inner(40);
            a = oracle_arctan(x, lo);
        }
        const BigScalar b = oracle_arctan(x, hi);
        EXPECT_LT(BigScalar(abs(a - b) / b).convert_to<double>(), 1e-30) << x;
    }
}

TEST(Oracle, MatchesStdAtan)
{
    PrecisionScope scope(50);
    for (double x : {1e-300, 1e-9, 0.001, 0.5, 1.0, 3.0, 1e3, 1e12, 1e300})
        EXPECT_NEAR(oracle_arctan(x, OracleConfig{}).convert_to<double>(), std::atan(x),
                    4 * std::numeric_limits<double>::epsilon() * std::atan(x))
            << x;
}

TEST(Oracle, PiCrossCheck)
{
    const BigScalar& p = pi_big(80);
    PrecisionScope scope(80);
    const BigScalar ref("3.14159265358979323846264338327950288419716939937510582097494459230781640628620899");
    EXPECT_LT(BigScalar(abs(p - ref)).convert_to<double>(), 1e-78);
    EXPECT_EQ(&pi_big(80), &p);
}

TEST(OracleConfig, Validation)
{
    OracleConfig ok;
    EXPECT_NO_THROW(ok.validate());
    OracleConfig bad;
    bad.report_digits = 20;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = OracleConfig{};
    bad.working_digits = 35;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    EXPECT_DOUBLE_EQ(ok.noise_floor(), 1e-25);
}

TEST(OracleConfig, Environment)
{
    {
        EnvGuard env(nullptr);
        const auto cfg = OracleConfig::from_environment();
        EXPECT_EQ(cfg.report_digits, 30u);
        EXPECT_EQ(cfg.working_digits, 50u);
    }
    {
        EnvGuard env("45");
        const auto cfg = OracleConfig::from_environment();
        EXPECT_EQ(cfg.report_digits, 45u);
        EXPECT_EQ(cfg.working_digits, 65u);
    }
    {
        EnvGuard env("10");
        EXPECT_EQ(OracleConfig::from_environment().report_digits, 30u);
    }
    {
        EnvGuard env("many");
        EXPECT_THROW(OracleConfig::from_environment(), std::invalid_argument);
    }
}

TEST(Scalar, ToBigKeepsRequestedPrecision)
{
    PrecisionScope scope(20);
    const BigInt big = (BigInt(1) << 200) + 1;
    const BigScalar v = to_big(big, 80);
    EXPECT_GE(v.precision(), 80u);
    EXPECT_EQ(BigScalar(v - ldexp(BigScalar(1, 80), 200)).convert_to<double>(), 1.0);
    const BigScalar third = to_big(Rational(1, 3), 60);
    PrecisionScope wide(60);
    EXPECT_LT(BigScalar(abs(third * 3 - 1)).convert_to<double>(), 1e-58);
}
