#pragma once

// Sampled sup-norm estimation and bound certification against the oracle.
// Verdicts are evidence from dense sampling plus local refinement, not
// interval-arithmetic proofs.

#include "arctan_cert/approximant.hpp"
#include "arctan_cert/oracle.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arctan_cert {

struct Interval {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    bool lo_open = false;
    bool hi_open = true;

    /// "lo:hi" with hi possibly "inf". Finite endpoints are closed.
    static Interval parse(std::string_view text);
    static Interval closed(double lo, double hi) { return {lo, hi, false, false}; }
    static Interval positive_reals() { return {}; }

    bool unbounded() const { return hi == std::numeric_limits<double>::infinity(); }
    /// Throws std::domain_error unless 0 <= lo < hi.
    void validate() const;
    /// Round-trips through parse, e.g. "0:inf", "0:1".
    std::string text() const;
};

struct SamplingOptions {
    unsigned grid_points = 4097;
    double refine_tol = 1e-12;
    unsigned refine_peaks = 3;
    /// 0 = std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct ErrorReport {
    std::string family;
    Interval interval;
    double sup_error = 0.0;
    double arg_max = 0.0;
    std::optional<double> claimed_bound;
    BoundKind bound_kind = BoundKind::Approximation;
    bool satisfied = false;
    /// Smallest signed margin by which a bound held (negative = violated).
    /// +inf for plain approximations.
    double min_gap = std::numeric_limits<double>::infinity();
    double arg_min_gap = 0.0;
    std::size_t evaluations = 0;
};

/// Sample abscissae: a tan-mapped uniform angle grid for unbounded (or wide)
/// intervals, a uniform grid plus Chebyshev nodes for bounded ones. Sorted,
/// unique, inside the interval.
std::vector<double> sample_points(const Interval& interval, unsigned grid_points);

/// sup |f - atan| over the interval. satisfied = sup <= claimed when a
/// claimed bound is given, true otherwise.
ErrorReport sup_error(const Approximant& f, const Interval& interval,
                      std::optional<double> claimed_bound = std::nullopt,
                      const SamplingOptions& options = {}, const OracleConfig& cfg = {});

/// Checks f <= atan (Lower) or f >= atan (Upper) on the samples.
/// satisfied = min_gap >= -cfg.noise_floor().
ErrorReport certify_bound(const Approximant& f, BoundKind kind, const Interval& interval,
                          const SamplingOptions& options = {}, const OracleConfig& cfg = {});

/// Full certification of a family instance against its own claim: both
/// sides plus the sandwich width for two-sided families, the single side
/// for one-sided ones, the sup-norm claim for approximations.
ErrorReport certify_family(const Approximant& f, const Interval& interval,
                           const SamplingOptions& options = {}, const OracleConfig& cfg = {});

struct NormTransfer {
    double inner_sup = 0.0; // sup |f - atan| on (0, t)
    double outer_sup = 0.0; // sup |lifted f - atan| on (0, 2t/(1-t^2))
    double outer_hi = 0.0;
    bool agrees = false;
};

/// Measures both sides of sup_(0,T) |2 f(u/(1+sqrt(1+u^2))) - atan| =
/// 2 sup_(0,t) |f - atan|, T = 2t/(1-t^2); agreement within 1% relative.
NormTransfer measure_norm_transfer(const Approximant& f, double t,
                                   const SamplingOptions& options = {}, const OracleConfig& cfg = {});
bool norm_transfer_check(const Approximant& f, double t, const SamplingOptions& options = {},
                         const OracleConfig& cfg = {});

} // namespace arctan_cert
