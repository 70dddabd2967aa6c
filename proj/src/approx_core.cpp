#include "arctan_cert/approx_core.hpp"

#include <cmath>

namespace arctan_cert {

template <Scalar T>
T half_angle_argument(const T& x)
{
    using std::isinf;
    using boost::multiprecision::isinf;
    if (isinf(x))
        return x > 0 ? T(1) : T(-1);
    return x / (1 + sqrt1p_sq(x));
}

template <Scalar T>
BoundPair<T> shafer_fink_bounds(const T& x)
{
    detail::require_nonnegative(x, "shafer_fink_bounds");
    const T body = x / (1 + 2 * sqrt1p_sq(x));
    return {3 * body, pi<T>() * body};
}

template <Scalar T>
T nested_radical(unsigned j, const T& x)
{
    if (!is_finite(x))
        throw std::domain_error("nested_radical: argument must be finite");
    T l(1);
    for (unsigned k = 0; k < j; ++k)
        l = l + hypot2(x, l);
    return l;
}

template <Scalar T>
std::vector<T> nested_radicals(unsigned j, const T& x)
{
    if (!is_finite(x))
        throw std::domain_error("nested_radicals: argument must be finite");
    std::vector<T> out;
    out.reserve(j + 1);
    out.emplace_back(1);
    for (unsigned k = 0; k < j; ++k)
        out.push_back(out.back() + hypot2(x, out.back()));
    return out;
}

template <Scalar T>
T refined_shafer_fink_denominator(const T& x)
{
    using std::sqrt;
    const T s = sqrt1p_sq(x);
    // sqrt(1 + x^2 + sqrt(1 + x^2)) = sqrt(s (s + 1))
    const T sqrt2 = sqrt(T(2));
    return 7 + 6 * s + 16 * sqrt2 * sqrt(s) * sqrt(s + 1);
}

template <Scalar T>
BoundPair<T> refined_shafer_fink_bounds(const T& x)
{
    using std::sqrt;
    detail::require_nonnegative(x, "refined_shafer_fink_bounds");
    const T f = x / refined_shafer_fink_denominator(x);
    const T low = pi<T>() * (3 + 8 * sqrt(T(2)));
    return {low * f, 45 * f};
}

template <Scalar T>
T radical_upper_bound(const T& x)
{
    using std::sqrt;
    detail::require_nonnegative(x, "radical_upper_bound");
    const T p = pi<T>();
    const T s = sqrt1p_sq(x);
    // 1 + x^2 + x sqrt(1 + x^2) = s (s + x)
    const T den = 4 / p + sqrt(T(2)) * sqrt(s) * sqrt(s + x);
    return p * x / den;
}

template <Scalar T>
T lagrange_p(const T& u)
{
    using std::sqrt;
    detail::require_unit(u, "lagrange_p");
    const T p = pi<T>();
    const T r2 = sqrt(T(2));
    return p / 4 * u * (u - r2 + 1) / (2 - r2) + p / 8 * u * (u - 1) / ((r2 - 1) * (r2 - 2));
}

template <Scalar T>
T lifted_lagrange(const T& x)
{
    using std::sqrt;
    detail::require_nonnegative(x, "lifted_lagrange");
    const T p = pi<T>();
    const T r2 = sqrt(T(2));
    const T q = 1 + sqrt1p_sq(x);
    // pi x ((4+sqrt2) q - sqrt2 x) / (8 q^2), grouped so q^2 never forms
    return (p * x / (8 * q)) * (((4 + r2) * q - r2 * x) / q);
}

double lift_interval_map(double t)
{
    if (!(t > 0 && t < 1))
        throw std::domain_error("lift_interval_map: t must lie in (0, 1)");
    return 2 * t / (1 - t * t);
}

#define ARCTAN_CERT_INSTANTIATE(T)                                          \
    template T half_angle_argument<T>(const T&);                            \
    template BoundPair<T> shafer_fink_bounds<T>(const T&);                  \
    template T nested_radical<T>(unsigned, const T&);                       \
    template std::vector<T> nested_radicals<T>(unsigned, const T&);         \
    template T refined_shafer_fink_denominator<T>(const T&);                \
    template BoundPair<T> refined_shafer_fink_bounds<T>(const T&);          \
    template T radical_upper_bound<T>(const T&);                            \
    template T lagrange_p<T>(const T&);                                     \
    template T lifted_lagrange<T>(const T&);

ARCTAN_CERT_INSTANTIATE(double)
ARCTAN_CERT_INSTANTIATE(BigScalar)

#undef ARCTAN_CERT_INSTANTIATE

} // namespace arctan_cert
