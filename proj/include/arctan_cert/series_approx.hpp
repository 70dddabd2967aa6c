#pragma once

// Series approximants of atan: odd Chebyshev expansions, Gauss continued
// fraction convergents, the expansion about x = 1 (s_n, t_n and their blend
// w_n) and the Machin-type series for pi built from it.

#include "arctan_cert/scalar.hpp"

#include <vector>

namespace arctan_cert {

/// T_k(x) by the three-term recurrence. |x| <= 1.
template <Scalar T>
T chebyshev_T(unsigned k, const T& x);

/// c_k = 2 (-1)^k r^(2k+1) / (2k+1), k = 0..n. With r = sqrt2 - 1 these
/// give atan on [-1, 1]; with r = m/(1+sqrt(1+m^2)) they give atan(m x).
template <Scalar T>
std::vector<T> chebyshev_atan_coefficients(unsigned n, const T& ratio);

/// sum_k c[k] T_(2k+1)(x) by Clenshaw's recurrence.
template <Scalar T>
T chebyshev_odd_sum(const std::vector<T>& c, const T& x);

/// Degree 2n+1 truncation of the Chebyshev expansion of atan on [-1, 1].
/// Uniform error on [0, 1] at most (1+sqrt2)^-(2n+3).
template <Scalar T>
T cheb_arctan(unsigned n, const T& x);

/// Truncated expansion of atan(m x), |x| < 1, m > 0.
template <Scalar T>
T cheb_arctan_scaled(unsigned n, const T& m, const T& x);

/// 2 cheb_arctan(n, x/(1+sqrt(1+x^2))); error at most (3+2sqrt2)^-n.
template <Scalar T>
T cheb_lifted(unsigned n, const T& x);

/// Depth-n convergent of atan z = z/(1 + z^2/(3 + 4z^2/(5 + 9z^2/(7 + ...)))),
/// evaluated from the tail outwards.
template <Scalar T>
T cf_arctan(unsigned n, const T& x);

template <Scalar T>
T cf_lifted(unsigned n, const T& x);

/// s_n(u) = sum_{j<=n} q^j (a/(4j+1) + 2a^2/(4j+2) + 2a^3/(4j+3)),
/// a = u/(u+1), q = -4a^4. Upper bound of atan on [0, 1] for even n,
/// lower bound for odd n.
template <Scalar T>
T taylor1_s(unsigned n, const T& u);

/// t_n(u) = pi/4 - s_n((1-u)/(1+u)), summed directly in powers of (1-u).
template <Scalar T>
T taylor1_t(unsigned n, const T& u);

/// pi/4 - taylor1_s(n, (1-u)/(1+u)).
template <Scalar T>
T taylor1_t_composed(unsigned n, const T& u);

/// (u^(4n+4) t_n(u) + (1-u)^(4n+4) s_n(u)) / (u^(4n+4) + (1-u)^(4n+4)).
template <Scalar T>
T blend_w(unsigned n, const T& u);

template <Scalar T>
T blend_w_lifted(unsigned n, const T& x);

/// Partial sum j = 0..n of the series for atan(1/t), t >= 1.
template <Scalar T>
T arctan_recip_series(const T& t, unsigned n);

/// The two Machin series 16 atan(1/5) - 4 atan(1/239), rows j = 0..terms-1,
/// summed exactly.
Rational machin_pi_rational(unsigned terms);

/// machin_pi_rational rounded to `digits10` digits.
BigScalar machin_pi(unsigned terms, unsigned digits10);
inline BigScalar machin_pi(unsigned terms) { return machin_pi(terms, default_digits()); }

} // namespace arctan_cert
