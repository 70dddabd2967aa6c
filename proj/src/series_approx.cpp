#include "arctan_cert/series_approx.hpp"

#include "arctan_cert/approx_core.hpp"

#include <cmath>
#include <stdexcept>

namespace arctan_cert {

namespace {

template <Scalar T>
void require_chebyshev_domain(const T& x, const char* what)
{
    using std::abs;
    using boost::multiprecision::abs;
    if (!is_finite(x) || abs(x) > 1)
        throw std::domain_error(std::string(what) + ": argument must lie in [-1, 1]");
}

// Shared body of s_n and of the atan(1/t) series: a = 1/(t+1) there.
template <Scalar T>
T three_fraction_sum(unsigned n, const T& a)
{
    const T a2 = a * a;
    const T q = -4 * a2 * a2;
    T qj(1);
    T acc(0);
    for (unsigned j = 0; j <= n; ++j) {
        const unsigned m = 4 * j;
        acc += qj * (a / (m + 1) + 2 * a2 / (m + 2) + 2 * a2 * a / (m + 3));
        qj *= q;
    }
    return acc;
}

} // namespace

template <Scalar T>
T chebyshev_T(unsigned k, const T& x)
{
    require_chebyshev_domain(x, "chebyshev_T");
    if (k == 0)
        return T(1);
    T prev(1);
    T cur = x;
    for (unsigned i = 1; i < k; ++i) {
        T next = 2 * x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

template <Scalar T>
std::vector<T> chebyshev_atan_coefficients(unsigned n, const T& ratio)
{
    std::vector<T> c;
    c.reserve(n + 1);
    const T r2 = ratio * ratio;
    T rp = ratio;
    for (unsigned k = 0; k <= n; ++k) {
        T ck = 2 * rp / (2 * k + 1);
        if (k % 2 == 1)
            ck = -ck;
        c.push_back(std::move(ck));
        rp *= r2;
    }
    return c;
}

template <Scalar T>
T chebyshev_odd_sum(const std::vector<T>& c, const T& x)
{
    if (c.empty())
        return T(0);
    // Clenshaw over degrees N..1 with a_j = c[(j-1)/2] for odd j, 0 otherwise
    const std::size_t degree = 2 * c.size() - 1;
    const T two_x = 2 * x;
    T b1(0);
    T b2(0);
    for (std::size_t j = degree; j >= 1; --j) {
        T b0 = two_x * b1 - b2;
        if (j % 2 == 1)
            b0 += c[(j - 1) / 2];
        b2 = std::move(b1);
        b1 = std::move(b0);
    }
    // a_0 = 0
    return x * b1 - b2;
}

template <Scalar T>
T cheb_arctan(unsigned n, const T& x)
{
    using std::sqrt;
    require_chebyshev_domain(x, "cheb_arctan");
    const T ratio = sqrt(T(2)) - 1;
    return chebyshev_odd_sum(chebyshev_atan_coefficients(n, ratio), x);
}

template <Scalar T>
T cheb_arctan_scaled(unsigned n, const T& m, const T& x)
{
    using std::abs;
    using boost::multiprecision::abs;
    if (!is_finite(m) || !(m > 0))
        throw std::domain_error("cheb_arctan_scaled: m must be positive");
    if (!is_finite(x) || !(abs(x) < 1))
        throw std::domain_error("cheb_arctan_scaled: argument must lie in (-1, 1)");
    const T ratio = m / (1 + sqrt1p_sq(m));
    return chebyshev_odd_sum(chebyshev_atan_coefficients(n, ratio), x);
}

template <Scalar T>
T cheb_lifted(unsigned n, const T& x)
{
    return lift([n](const T& u) { return cheb_arctan(n, u); }, x);
}

template <Scalar T>
T cf_arctan(unsigned n, const T& x)
{
    if (n == 0)
        throw std::domain_error("cf_arctan: depth must be positive");
    if (!is_finite(x))
        throw std::domain_error("cf_arctan: argument must be finite");
    const T x2 = x * x;
    T d(2 * n + 1);
    for (unsigned k = n; k >= 1; --k)
        d = T(2 * k - 1) + T(k) * T(k) * x2 / d;
    return x / d;
}

template <Scalar T>
T cf_lifted(unsigned n, const T& x)
{
    return lift([n](const T& u) { return cf_arctan(n, u); }, x);
}

template <Scalar T>
T taylor1_s(unsigned n, const T& u)
{
    detail::require_unit(u, "taylor1_s");
    return three_fraction_sum(n, T(u / (u + 1)));
}

template <Scalar T>
T taylor1_t(unsigned n, const T& u)
{
    detail::require_unit(u, "taylor1_t");
    const T v = 1 - u;
    const T v2 = v * v;
    const T q = -(v2 * v2) / 4;
    T qj(1);
    T acc(0);
    for (unsigned j = 0; j <= n; ++j) {
        const unsigned m = 4 * j;
        acc += qj * (v / (2 * (m + 1)) + v2 / (2 * (m + 2)) + v2 * v / (4 * (m + 3)));
        qj *= q;
    }
    return pi<T>() / 4 - acc;
}

template <Scalar T>
T taylor1_t_composed(unsigned n, const T& u)
{
    detail::require_unit(u, "taylor1_t");
    return pi<T>() / 4 - taylor1_s(n, T((1 - u) / (1 + u)));
}

template <Scalar T>
T blend_w(unsigned n, const T& u)
{
    detail::require_unit(u, "blend_w");
    const unsigned e = 4 * n + 4;
    const T wt = ipow(u, e);
    const T ws = ipow(T(1 - u), e);
    return (wt * taylor1_t(n, u) + ws * taylor1_s(n, u)) / (wt + ws);
}

template <Scalar T>
T blend_w_lifted(unsigned n, const T& x)
{
    return lift([n](const T& u) { return blend_w(n, u); }, x);
}

template <Scalar T>
T arctan_recip_series(const T& t, unsigned n)
{
    if (!is_finite(t) || t < 1)
        throw std::domain_error("arctan_recip_series: t must be at least 1");
    return three_fraction_sum(n, T(1 / (t + 1)));
}

Rational machin_pi_rational(unsigned terms)
{
    if (terms == 0)
        throw std::domain_error("machin_pi: terms must be positive");
    // 16 atan(1/5):  ratio -1/324,       row 8/(3(4j+1)) + 8/(9(4j+2)) + 8/(54(4j+3))
    // 4 atan(1/239): ratio -1/829440000, row 1/(60(4j+1)) + 1/(7200(4j+2)) + 1/(1728000(4j+3))
    const Rational q5(BigInt(-1), BigInt(324));
    const Rational q239(BigInt(-1), BigInt(829440000));
    Rational p5(1);
    Rational p239(1);
    Rational acc(0);
    for (unsigned j = 0; j < terms; ++j) {
        const long m = 4L * j;
        const Rational row5 = Rational(BigInt(8), BigInt(3 * (m + 1)))
                              + Rational(BigInt(8), BigInt(9 * (m + 2)))
                              + Rational(BigInt(8), BigInt(54 * (m + 3)));
        const Rational row239 = Rational(BigInt(1), BigInt(60 * (m + 1)))
                                + Rational(BigInt(1), BigInt(7200 * (m + 2)))
                                + Rational(BigInt(1), BigInt(1728000 * (m + 3)));
        acc += p5 * row5 - p239 * row239;
        p5 *= q5;
        p239 *= q239;
    }
    return acc;
}

BigScalar machin_pi(unsigned terms, unsigned digits10)
{
    return to_big(machin_pi_rational(terms), digits10);
}

#define ARCTAN_CERT_INSTANTIATE(T)                                                \
    template T chebyshev_T<T>(unsigned, const T&);                                \
    template std::vector<T> chebyshev_atan_coefficients<T>(unsigned, const T&);   \
    template T chebyshev_odd_sum<T>(const std::vector<T>&, const T&);             \
    template T cheb_arctan<T>(unsigned, const T&);                                \
    template T cheb_arctan_scaled<T>(unsigned, const T&, const T&);               \
    template T cheb_lifted<T>(unsigned, const T&);                                \
    template T cf_arctan<T>(unsigned, const T&);                                  \
    template T cf_lifted<T>(unsigned, const T&);                                  \
    template T taylor1_s<T>(unsigned, const T&);                                  \
    template T taylor1_t<T>(unsigned, const T&);                                  \
    template T taylor1_t_composed<T>(unsigned, const T&);                         \
    template T blend_w<T>(unsigned, const T&);                                    \
    template T blend_w_lifted<T>(unsigned, const T&);                             \
    template T arctan_recip_series<T>(const T&, unsigned);

ARCTAN_CERT_INSTANTIATE(double)
ARCTAN_CERT_INSTANTIATE(BigScalar)

#undef ARCTAN_CERT_INSTANTIATE

} // namespace arctan_cert
