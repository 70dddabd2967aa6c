#pragma once

// The order-n nested-radical family
//
//   D K_low a_n(x) <= atan x <= D K_high a_n(x),
//   a_n(x) = x / sum_j (-1)^(n-j) L_j(x) 2^j e_j(1, 4, ..., 4^(n-1)),
//   D      = prod_{k=1..n} (4^k - 1),
//
// where {K_low, K_high} = {g_n(0), g_n(pi/2)} = {1, g_n(pi/2)} and
// g_n(t) = sum_k A_k (t/2^k) cot(t/2^k) with A_k the coefficients of
// p_n(y) = prod_{k=1..n} (4^k y - 1)/(4^k - 1).

#include "arctan_cert/approx_core.hpp"
#include "arctan_cert/scalar.hpp"

#include <vector>

namespace arctan_cert {

inline constexpr unsigned kMaxCoefficientOrder = 32;
inline constexpr unsigned kMaxMasterOrder = 16;

struct MasterParams {
    unsigned n = 0;
    std::vector<Rational> coeffs; // A_0 .. A_n
    std::vector<BigInt> sym;      // e_0 .. e_n over (1, 4, ..., 4^(n-1))
    BigInt denom_product;         // D
    BigScalar k_low;
    BigScalar k_high;
    unsigned digits = 0; // precision the K constants were computed at
};

/// Exact coefficients A_0..A_n of p_n. 1 <= n <= 32.
std::vector<Rational> pn_coefficients(unsigned n);

/// p_n evaluated exactly from its coefficients.
Rational pn_evaluate(const std::vector<Rational>& coeffs, const Rational& y);

/// e_0..e_n of (1, 4, ..., 4^(n-1)).
std::vector<BigInt> elementary_symmetric(unsigned n);

/// prod_{k=1..n} (4^k - 1).
BigInt denom_product(unsigned n);

/// a_n(x); a_n(0) = 0.
template <Scalar T>
T a_n(unsigned n, const T& x);

/// t cot t, switching to its Maclaurin series below 1e-3.
BigScalar x_cot_x(const BigScalar& t);

/// g_n(theta) at the default BigScalar precision, 0 < theta <= pi/2.
BigScalar gn_eval(unsigned n, const BigScalar& theta);

/// Cached parameters for order n at the current default precision.
/// 1 <= n <= 16. Safe to call from multiple threads.
const MasterParams& master_params(unsigned n);

/// (D K_low a_n(x), D K_high a_n(x)).
template <Scalar T>
BoundPair<T> master_bounds(unsigned n, const T& x);

} // namespace arctan_cert
