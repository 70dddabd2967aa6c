#pragma once

#include "arctan_cert/scalar.hpp"

namespace arctan_cert {

struct OracleConfig {
    unsigned working_digits = 50;
    unsigned report_digits = 30;
    double reduction_threshold = 1.0 / 1024.0;

    /// Defaults, with report_digits taken from ARCTAN_CERT_DIGITS when set
    /// (clamped to at least 30) and working_digits = report_digits + 20.
    static OracleConfig from_environment();

    /// Throws std::invalid_argument unless working_digits >= 40,
    /// report_digits >= 30 and working_digits >= report_digits + 10.
    void validate() const;

    /// 10^-(report_digits - 5): largest violation attributed to oracle noise.
    double noise_floor() const;
};

/// Reference arctangent at cfg.working_digits. Halves the argument with
/// atan x = 2 atan(x / (1 + sqrt(1 + x^2))) until it falls below the
/// reduction threshold, sums the Maclaurin series, then scales back.
/// +inf gives pi/2. The result carries working_digits of precision.
BigScalar oracle_arctan(const BigScalar& x, const OracleConfig& cfg);
BigScalar oracle_arctan(double x, const OracleConfig& cfg);

/// The halving/Maclaurin path alone, at `digits10` digits, for x >= 0 finite.
BigScalar reduced_arctan(const BigScalar& x, unsigned digits10, double threshold = 1.0 / 1024.0);

} // namespace arctan_cert
