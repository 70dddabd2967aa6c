#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace arctan_cert {

/// Extended-precision real. Precision is carried per value; fresh values
/// take the process-wide default set through PrecisionScope.
using BigScalar = boost::multiprecision::mpfr_float;
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, BigScalar>;

unsigned default_digits();

/// Sets the default BigScalar precision (decimal digits) for its lifetime.
/// The default is process-global: do not construct one while worker
/// threads are evaluating BigScalar expressions.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits10);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

/// BigScalar with exactly `digits10` digits holding the given integer.
BigScalar to_big(const BigInt& value, unsigned digits10);
BigScalar to_big(const Rational& value, unsigned digits10);

/// Pi from the Machin series, cross-checked against the oracle's reduction
/// path. Cached per precision; safe to call from multiple threads.
const BigScalar& pi_big(unsigned digits10);
inline const BigScalar& pi_big() { return pi_big(default_digits()); }

template <Scalar T>
T pi()
{
    if constexpr (std::is_same_v<T, double>)
        return std::numbers::pi;
    else
        return pi_big();
}

template <Scalar T>
double to_double(const T& v)
{
    if constexpr (std::is_same_v<T, double>)
        return v;
    else
        return v.template convert_to<double>();
}

template <Scalar T>
bool is_finite(const T& v)
{
    using std::isfinite;
    using boost::multiprecision::isfinite;
    return isfinite(v);
}

/// sqrt(1 + x^2) without overflow for large x.
template <Scalar T>
T sqrt1p_sq(const T& x)
{
    using std::sqrt;
    using std::abs;
    const T ax = abs(x);
    if (ax > 1) {
        const T r = 1 / ax;
        return ax * sqrt(1 + r * r);
    }
    return sqrt(1 + x * x);
}

/// sqrt(a^2 + b^2) scaled by the larger magnitude.
template <Scalar T>
T hypot2(const T& a, const T& b)
{
    using std::sqrt;
    using std::abs;
    const T aa = abs(a);
    const T ab = abs(b);
    const T big = aa > ab ? aa : ab;
    if (big == 0)
        return T(0);
    const T small = aa > ab ? ab : aa;
    const T r = small / big;
    return big * sqrt(1 + r * r);
}

template <Scalar T>
T ipow(T base, unsigned exponent)
{
    T result(1);
    while (exponent != 0) {
        if (exponent & 1u)
            result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

namespace detail {

template <Scalar T>
void require_nonnegative(const T& x, const char* what)
{
    if (!is_finite(x) || x < 0)
        throw std::domain_error(std::string(what) + ": argument must be finite and non-negative");
}

template <Scalar T>
void require_unit(const T& u, const char* what)
{
    if (!is_finite(u) || u < 0 || u > 1)
        throw std::domain_error(std::string(what) + ": argument must lie in [0, 1]");
}

} // namespace detail
} // namespace arctan_cert
