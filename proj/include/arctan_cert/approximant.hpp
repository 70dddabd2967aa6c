#pragma once

// Value-type descriptor for one approximant instance, evaluable in double and
// in BigScalar, plus the static metadata (claimed bound, domain) per family.

#include "arctan_cert/scalar.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace arctan_cert {

enum class FamilyId {
    ShaferFink,   // sf
    Refined,      // t2
    RadicalUpper, // t4
    Master,       // master
    Lagrange,     // lagrange
    LiftedLagrange, // t5
    Cheb,         // cheb
    ChebLifted,   // cheb-lifted
    Cf,           // cf
    CfLifted,     // cf-lifted
    TaylorS,      // s
    TaylorT,      // t
    Blend,        // w
    BlendLifted,  // w-lifted
    ChebScaled,   // cheb-scaled (parameter m)
    Oracle,       // the reference itself
};

/// Which side of a two-sided bound family to evaluate.
enum class Side { Value, Lower, Upper };

enum class BoundKind { Lower, Upper, TwoSided, Approximation };

std::string_view to_string(BoundKind kind);
std::string_view to_string(Side side);

struct FamilyInfo {
    FamilyId id;
    std::string_view name;
    std::string_view reference;
    std::string_view claim;
    std::string_view domain_text;
    bool needs_order;
    unsigned min_order;
    unsigned max_order;
    double domain_hi; // inf for [0, inf)
    BoundKind kind;
};

std::span<const FamilyInfo> all_families();
const FamilyInfo& family_info(FamilyId id);
/// Throws std::invalid_argument for unknown identifiers.
const FamilyInfo& family_info(std::string_view name);

class Approximant {
public:
    Approximant() = default;
    /// Validates the order against the family's range.
    Approximant(FamilyId family, std::optional<unsigned> n = std::nullopt, Side side = Side::Value);

    static Approximant oracle();
    static Approximant cheb_scaled(unsigned n, double m);

    FamilyId family() const { return family_; }
    unsigned order() const { return n_; }
    Side side() const { return side_; }
    double scale() const { return scale_; }
    double parameter() const { return m_; }
    const FamilyInfo& info() const { return family_info(family_); }

    /// Same approximant multiplied by `factor` (mutation testing).
    Approximant scaled(double factor) const;
    Approximant with_side(Side side) const;
    /// 2 f(x/(1+sqrt(1+x^2))), applied `count` more times.
    Approximant lifted(unsigned count = 1) const;
    unsigned lifts() const { return lifts_; }

    /// Upper end of the domain the approximant is defined on (inf or 1).
    double domain_hi() const;

    double operator()(double x) const;
    BigScalar operator()(const BigScalar& x) const;

    /// The family's claimed sup-norm bound (for two-sided families: on the
    /// sandwich width), if it has one.
    std::optional<double> claimed_bound() const;

    /// e.g. "master(n=3,lower)".
    std::string label() const;

private:
    template <Scalar T>
    T evaluate(const T& x) const;
    template <Scalar T>
    T evaluate_base(const T& x) const;
    std::optional<double> base_claimed_bound() const;

    FamilyId family_ = FamilyId::Oracle;
    unsigned n_ = 0;
    Side side_ = Side::Value;
    double scale_ = 1.0;
    double m_ = 1.0;
    unsigned lifts_ = 0;
};

} // namespace arctan_cert
