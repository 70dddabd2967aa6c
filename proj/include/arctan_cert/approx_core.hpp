#pragma once

// Closed-form arctangent bounds on [0, inf), the nested radicals L_j and the
// half-angle lifting operator f(u) -> 2 f(u / (1 + sqrt(1 + u^2))).

#include "arctan_cert/scalar.hpp"

#include <vector>

namespace arctan_cert {

template <Scalar T>
struct BoundPair {
    T lower;
    T upper;
};

/// x / (1 + sqrt(1 + x^2)): the tangent of half the angle whose tangent is x.
/// Maps [0, inf) onto [0, 1).
template <Scalar T>
T half_angle_argument(const T& x);

/// 3x/(1+2sqrt(1+x^2)) < atan x < pi x/(1+2sqrt(1+x^2)) for x > 0.
template <Scalar T>
BoundPair<T> shafer_fink_bounds(const T& x);

/// L_0 = 1, L_{j+1} = L_j + sqrt(x^2 + L_j^2). L_j(x) = x cot(atan(x) / 2^j).
template <Scalar T>
T nested_radical(unsigned j, const T& x);

/// L_0 .. L_j at x.
template <Scalar T>
std::vector<T> nested_radicals(unsigned j, const T& x);

/// Two-level refinement of the Shafer-Fink pair:
/// (pi(3+8sqrt2) f(x), 45 f(x)) with
/// f(x) = x / (7 + 6sqrt(1+x^2) + 16sqrt2 sqrt(1+x^2+sqrt(1+x^2))).
template <Scalar T>
BoundPair<T> refined_shafer_fink_bounds(const T& x);

/// Denominator of f above; exposed for consistency checks.
template <Scalar T>
T refined_shafer_fink_denominator(const T& x);

/// pi x / (4/pi + sqrt2 sqrt(1 + x^2 + x sqrt(1+x^2))), an upper bound on
/// atan x that tends to pi/2.
template <Scalar T>
T radical_upper_bound(const T& x);

/// Quadratic interpolant of atan through (0, 0), (sqrt2-1, pi/8), (1, pi/4).
template <Scalar T>
T lagrange_p(const T& u);

/// Closed form of 2 lagrange_p(half_angle_argument(x)); within 1/115 of
/// atan on [0, inf).
template <Scalar T>
T lifted_lagrange(const T& x);

/// 2 f(half_angle_argument(x)). The inner argument lies in [0, 1).
template <Scalar T, typename F>
T lift(F&& inner, const T& x)
{
    detail::require_nonnegative(x, "lift");
    return 2 * inner(half_angle_argument(x));
}

/// Applies the lift `count` times.
template <Scalar T, typename F>
T lift_n(F&& inner, const T& x, unsigned count)
{
    detail::require_nonnegative(x, "lift");
    T u = x;
    for (unsigned i = 0; i < count; ++i)
        u = half_angle_argument(u);
    T scale(1);
    for (unsigned i = 0; i < count; ++i)
        scale *= 2;
    return scale * inner(u);
}

/// 2t/(1-t^2): the error of the lifted approximant on (0, 2t/(1-t^2)) equals
/// twice the inner error on (0, t).
double lift_interval_map(double t);

} // namespace arctan_cert
