#include "arctan_cert/oracle.hpp"

#include "arctan_cert/series_approx.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace arctan_cert {

OracleConfig OracleConfig::from_environment()
{
    OracleConfig cfg;
    if (const char* env = std::getenv("ARCTAN_CERT_DIGITS")) {
        unsigned digits = 0;
        const char* end = env + std::strlen(env);
        const auto [ptr, ec] = std::from_chars(env, end, digits);
        if (ec != std::errc() || ptr != end)
            throw std::invalid_argument("ARCTAN_CERT_DIGITS must be a positive integer");
        cfg.report_digits = digits < 30 ? 30 : digits;
        cfg.working_digits = cfg.report_digits + 20;
    }
    return cfg;
}

void OracleConfig::validate() const
{
    if (working_digits < 40)
        throw std::invalid_argument("OracleConfig: working_digits must be at least 40");
    if (report_digits < 30)
        throw std::invalid_argument("OracleConfig: report_digits must be at least 30");
    if (working_digits < report_digits + 10)
        throw std::invalid_argument("OracleConfig: working_digits must exceed report_digits by 10");
    if (!(reduction_threshold > 0 && reduction_threshold < 1))
        throw std::invalid_argument("OracleConfig: reduction_threshold must lie in (0, 1)");
}

double OracleConfig::noise_floor() const
{
    return std::pow(10.0, -static_cast<double>(report_digits) + 5);
}

BigScalar reduced_arctan(const BigScalar& x, unsigned digits10, double threshold)
{
    BigScalar v;
    v.precision(digits10);
    v = x;
    int halvings = 0;
    while (v > threshold) {
        v = v / (1 + sqrt(1 + v * v));
        ++halvings;
    }
    // atan v = v - v^3/3 + v^5/5 - ...
    BigScalar eps;
    eps.precision(digits10);
    eps = 10;
    eps = pow(eps, -static_cast<int>(digits10) - 2);
    const BigScalar v2 = v * v;
    BigScalar power = v;
    BigScalar sum = v;
    for (unsigned k = 1; abs(power) > eps * abs(sum); ++k) {
        power *= v2;
        power = -power;
        sum += power / (2 * k + 1);
    }
    return ldexp(sum, halvings);
}

BigScalar oracle_arctan(const BigScalar& x, const OracleConfig& cfg)
{
    if (boost::multiprecision::isnan(x) || x < 0)
        throw std::domain_error("oracle_arctan: argument must be non-negative");
    if (boost::multiprecision::isinf(x)) {
        BigScalar half = pi_big(cfg.working_digits);
        half /= 2;
        return half;
    }
    return reduced_arctan(x, cfg.working_digits, cfg.reduction_threshold);
}

BigScalar oracle_arctan(double x, const OracleConfig& cfg)
{
    if (std::isnan(x) || x < 0)
        throw std::domain_error("oracle_arctan: argument must be non-negative");
    BigScalar bx;
    bx.precision(cfg.working_digits);
    bx = x;
    return oracle_arctan(bx, cfg);
}

const BigScalar& pi_big(unsigned digits10)
{
    static std::mutex mutex;
    static std::map<unsigned, BigScalar> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(digits10);
    if (it != cache.end())
        return it->second;

    // the dominant series gains log10(324) ~ 2.51 digits per row
    const unsigned terms = static_cast<unsigned>(digits10 / 2.5) + 3;
    BigScalar value = machin_pi(terms, digits10 + 5);

    BigScalar one;
    one.precision(digits10 + 5);
    one = 1;
    const BigScalar via_reduction = 4 * reduced_arctan(one, digits10 + 5);
    BigScalar tol;
    tol.precision(digits10 + 5);
    tol = 10;
    tol = pow(tol, -static_cast<int>(digits10));
    if (abs(value - via_reduction) > tol)
        throw std::logic_error("pi_big: Machin series and reduction path disagree");

    BigScalar stored;
    stored.precision(digits10);
    stored = value;
    return cache.emplace(digits10, std::move(stored)).first->second;
}

} // namespace arctan_cert
