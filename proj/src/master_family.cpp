#include "arctan_cert/master_family.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace arctan_cert {

namespace {

BigInt pow4(unsigned k)
{
    BigInt v = 1;
    v <<= 2 * k;
    return v;
}

const std::vector<BigInt>& cached_symmetric(unsigned n)
{
    static std::mutex mutex;
    static std::map<unsigned, std::vector<BigInt>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, elementary_symmetric(n)).first;
    return it->second;
}

// Extra digits needed to resolve g_n(pi/2) - 1, which shrinks like
// 2^-((n+1)(n+2)).
unsigned endpoint_guard_digits(unsigned n)
{
    return static_cast<unsigned>(0.31 * (n + 1) * (n + 2)) + 10;
}

} // namespace

std::vector<Rational> pn_coefficients(unsigned n)
{
    if (n == 0 || n > kMaxCoefficientOrder)
        throw std::domain_error("pn_coefficients: order must lie in [1, "
                                + std::to_string(kMaxCoefficientOrder) + "]");
    std::vector<Rational> c{Rational(1)};
    for (unsigned k = 1; k <= n; ++k) {
        const BigInt q = pow4(k);
        const Rational lead(q, q - 1);
        const Rational constant(BigInt(-1), q - 1);
        std::vector<Rational> next(c.size() + 1, Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i] * constant;
            next[i + 1] += c[i] * lead;
        }
        c = std::move(next);
    }
    return c;
}

Rational pn_evaluate(const std::vector<Rational>& coeffs, const Rational& y)
{
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * y + *it;
    return acc;
}

std::vector<BigInt> elementary_symmetric(unsigned n)
{
    if (n == 0)
        throw std::domain_error("elementary_symmetric: order must be positive");
    // coefficients of prod_{k=0..n-1} (1 + 4^k t)
    std::vector<BigInt> e{BigInt(1)};
    for (unsigned k = 0; k < n; ++k) {
        const BigInt v = pow4(k);
        e.emplace_back(0);
        for (std::size_t j = e.size() - 1; j > 0; --j)
            e[j] += e[j - 1] * v;
    }
    return e;
}

BigInt denom_product(unsigned n)
{
    BigInt d = 1;
    for (unsigned k = 1; k <= n; ++k)
        d *= pow4(k) - 1;
    return d;
}

template <Scalar T>
T a_n(unsigned n, const T& x)
{
    if (n == 0)
        throw std::domain_error("a_n: order must be positive");
    detail::require_nonnegative(x, "a_n");
    const auto& e = cached_symmetric(n);
    const std::vector<T> l = nested_radicals(n, x);
    T sum(0);
    T two_pow(1);
    for (unsigned j = 0; j <= n; ++j) {
        T ej;
        if constexpr (std::is_same_v<T, double>)
            ej = e[j].template convert_to<double>();
        else
            ej = to_big(e[j], default_digits());
        T term = l[j] * two_pow * ej;
        if ((n - j) % 2 == 1)
            sum -= term;
        else
            sum += term;
        two_pow *= 2;
    }
    if (!(sum > 0))
        throw std::logic_error("a_n: non-positive denominator");
    return x / sum;
}

BigScalar x_cot_x(const BigScalar& t)
{
    using boost::multiprecision::abs;
    const unsigned digits = t.precision();
    BigScalar acc;
    acc.precision(digits);
    if (t == 0) {
        acc = 1;
        return acc;
    }
    if (abs(t) < 1e-3) {
        // t cot t = sum_k (-1)^k 4^k B_2k t^2k / (2k)!, through t^14;
        // the next term is below 1e-55 here.
        static constexpr std::pair<long, long> kTerms[] = {
            {-1382, 638512875}, {-2, 93555}, {-1, 4725}, {-2, 945}, {-1, 45}, {-1, 3}, {1, 1}};
        const BigScalar s = t * t;
        acc = -4;
        acc /= 18243225;
        for (const auto& [num, den] : kTerms) {
            BigScalar c;
            c.precision(digits);
            c = num;
            c /= den;
            acc = acc * s + c;
        }
        return acc;
    }
    acc = t * cos(t) / sin(t);
    return acc;
}

BigScalar gn_eval(unsigned n, const BigScalar& theta)
{
    if (!(theta > 0) || theta > 1.5707963267948967)
        throw std::domain_error("gn_eval: theta must lie in (0, pi/2]");
    const unsigned digits = theta.precision();
    const auto coeffs = pn_coefficients(n);
    BigScalar acc;
    acc.precision(digits);
    acc = 0;
    for (unsigned k = 0; k <= n; ++k) {
        const BigScalar t = ldexp(theta, -static_cast<int>(k));
        acc += to_big(coeffs[k], digits) * x_cot_x(t);
    }
    return acc;
}

namespace {

std::unique_ptr<MasterParams> build_master_params(unsigned n, unsigned digits)
{
    auto p = std::make_unique<MasterParams>();
    p->n = n;
    p->digits = digits;
    p->coeffs = pn_coefficients(n);
    p->sym = elementary_symmetric(n);
    p->denom_product = denom_product(n);

    const unsigned work = digits + endpoint_guard_digits(n);
    BigScalar half_pi = pi_big(work);
    half_pi /= 2;
    const BigScalar g_end = gn_eval(n, half_pi);

    // sign of p_n(4^-m) for m > n is (-1)^n, so g_n increases for odd n
    const bool increasing = g_end > 1;
    if (increasing != (n % 2 == 1))
        throw std::logic_error("master_params: endpoint parity violated for n = "
                               + std::to_string(n));
    BigScalar one;
    one.precision(work);
    one = 1;
    p->k_low = increasing ? one : g_end;
    p->k_high = increasing ? g_end : one;
    return p;
}

} // namespace

const MasterParams& master_params(unsigned n)
{
    if (n == 0 || n > kMaxMasterOrder)
        throw std::domain_error("master_params: order must lie in [1, "
                                + std::to_string(kMaxMasterOrder) + "]");
    static std::mutex mutex;
    static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<MasterParams>> cache;
    const unsigned digits = default_digits();
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, digits}];
    if (!slot)
        slot = build_master_params(n, digits);
    return *slot;
}

template <Scalar T>
BoundPair<T> master_bounds(unsigned n, const T& x)
{
    const MasterParams& p = master_params(n);
    const T a = a_n(n, x);
    if constexpr (std::is_same_v<T, double>) {
        const double d = p.denom_product.template convert_to<double>();
        return {d * p.k_low.template convert_to<double>() * a,
                d * p.k_high.template convert_to<double>() * a};
    } else {
        const BigScalar d = to_big(p.denom_product, default_digits());
        return {BigScalar(d * p.k_low * a), BigScalar(d * p.k_high * a)};
    }
}

template double a_n<double>(unsigned, const double&);
template BigScalar a_n<BigScalar>(unsigned, const BigScalar&);
template BoundPair<double> master_bounds<double>(unsigned, const double&);
template BoundPair<BigScalar> master_bounds<BigScalar>(unsigned, const BigScalar&);

} // namespace arctan_cert
