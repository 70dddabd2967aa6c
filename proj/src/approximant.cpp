#include "arctan_cert/approximant.hpp"

#include "arctan_cert/approx_core.hpp"
#include "arctan_cert/master_family.hpp"
#include "arctan_cert/oracle.hpp"
#include "arctan_cert/series_approx.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace arctan_cert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::array kFamilies{
    FamilyInfo{FamilyId::ShaferFink, "sf", "Shafer-Fink",
               "3x/(1+2√(1+x²)) ≤ atan x ≤ πx/(1+2√(1+x²))", "[0,∞)", false, 0, 0, kInf,
               BoundKind::TwoSided},
    FamilyInfo{FamilyId::Refined, "t2", "refined Shafer-Fink",
               "π(3+8√2)·f(x) ≤ atan x ≤ 45·f(x)", "[0,∞)", false, 0, 0, kInf,
               BoundKind::TwoSided},
    FamilyInfo{FamilyId::RadicalUpper, "t4", "radical upper bound",
               "atan x ≤ πx/(4/π+√2√(1+x²+x√(1+x²)))", "[0,∞)", false, 0, 0, kInf,
               BoundKind::Upper},
    FamilyInfo{FamilyId::Master, "master", "nested-radical family", "K_high−K_low < 4^-n",
               "[0,∞)", true, 1, kMaxMasterOrder, kInf, BoundKind::TwoSided},
    FamilyInfo{FamilyId::Lagrange, "lagrange", "Lagrange interpolant", "1/230 on [0,1]", "[0,1]",
               false, 0, 0, 1.0, BoundKind::Approximation},
    FamilyInfo{FamilyId::LiftedLagrange, "t5", "lifted Lagrange interpolant", "1/115 on [0,∞)",
               "[0,∞)", false, 0, 0, kInf, BoundKind::Approximation},
    FamilyInfo{FamilyId::Cheb, "cheb", "Chebyshev series", "(1+√2)^-(2n+3) on [0,1]", "[0,1]",
               true, 0, 64, 1.0, BoundKind::Approximation},
    FamilyInfo{FamilyId::ChebLifted, "cheb-lifted", "lifted Chebyshev series",
               "(3+2√2)^-n on [0,∞)", "[0,∞)", true, 0, 64, kInf, BoundKind::Approximation},
    FamilyInfo{FamilyId::Cf, "cf", "continued fraction", "1/(2·4^n) on [0,1]", "[0,1]", true, 1,
               64, 1.0, BoundKind::Approximation},
    FamilyInfo{FamilyId::CfLifted, "cf-lifted", "lifted continued fraction", "4^-n on [0,∞)",
               "[0,∞)", true, 1, 64, kInf, BoundKind::Approximation},
    FamilyInfo{FamilyId::TaylorS, "s", "expansion about 1, s_n",
               "(√2u/(u+1))^(4n), at most 4^-n on [0,1]", "[0,1]", true, 0, 64, 1.0,
               BoundKind::Approximation},
    FamilyInfo{FamilyId::TaylorT, "t", "expansion about 1, t_n",
               "((1−u)/√2)^(4n), at most 4^-n on [0,1]", "[0,1]", true, 0, 64, 1.0,
               BoundKind::Approximation},
    FamilyInfo{FamilyId::Blend, "w", "blend of s_n and t_n", "20^-n on [0,1]", "[0,1]", true, 0,
               64, 1.0, BoundKind::Approximation},
    FamilyInfo{FamilyId::BlendLifted, "w-lifted", "lifted blend", "2·20^-n on [0,∞)", "[0,∞)",
               true, 0, 64, kInf, BoundKind::Approximation},
    FamilyInfo{FamilyId::ChebScaled, "cheb-scaled", "Chebyshev series of atan(m x)",
               "converges to atan(m x)", "[0,1)", true, 0, 256, 1.0, BoundKind::Approximation},
    FamilyInfo{FamilyId::Oracle, "oracle", "reference arctangent", "exact", "[0,∞)", false, 0, 0,
               kInf, BoundKind::Approximation},
};

} // namespace

std::string_view to_string(BoundKind kind)
{
    switch (kind) {
    case BoundKind::Lower:
        return "lower";
    case BoundKind::Upper:
        return "upper";
    case BoundKind::TwoSided:
        return "two-sided";
    case BoundKind::Approximation:
        return "approximation";
    }
    return "?";
}

std::string_view to_string(Side side)
{
    switch (side) {
    case Side::Value:
        return "value";
    case Side::Lower:
        return "lower";
    case Side::Upper:
        return "upper";
    }
    return "?";
}

std::span<const FamilyInfo> all_families()
{
    return kFamilies;
}

const FamilyInfo& family_info(FamilyId id)
{
    for (const auto& f : kFamilies)
        if (f.id == id)
            return f;
    throw std::logic_error("family_info: unregistered family");
}

const FamilyInfo& family_info(std::string_view name)
{
    for (const auto& f : kFamilies)
        if (f.name == name)
            return f;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

Approximant::Approximant(FamilyId family, std::optional<unsigned> n, Side side)
    : family_(family)
    , side_(side)
{
    const FamilyInfo& info = family_info(family);
    if (info.needs_order) {
        if (!n)
            throw std::invalid_argument("family '" + std::string(info.name) + "' requires an order n");
        if (*n < info.min_order || *n > info.max_order)
            throw std::invalid_argument("family '" + std::string(info.name) + "': order must lie in ["
                                        + std::to_string(info.min_order) + ", "
                                        + std::to_string(info.max_order) + "]");
        n_ = *n;
    } else if (n) {
        throw std::invalid_argument("family '" + std::string(info.name) + "' takes no order");
    }
    if (info.kind == BoundKind::TwoSided && side_ == Side::Value)
        throw std::invalid_argument("family '" + std::string(info.name) + "' needs a lower or upper side");
    if (info.kind == BoundKind::Upper)
        side_ = Side::Upper;
}

Approximant Approximant::oracle()
{
    return Approximant(FamilyId::Oracle);
}

Approximant Approximant::cheb_scaled(unsigned n, double m)
{
    if (!(m > 0) || !std::isfinite(m))
        throw std::invalid_argument("cheb-scaled: m must be positive");
    Approximant a(FamilyId::ChebScaled, n);
    a.m_ = m;
    return a;
}

Approximant Approximant::scaled(double factor) const
{
    Approximant a = *this;
    a.scale_ *= factor;
    return a;
}

Approximant Approximant::with_side(Side side) const
{
    Approximant a = *this;
    a.side_ = side;
    return a;
}

Approximant Approximant::lifted(unsigned count) const
{
    Approximant a = *this;
    a.lifts_ += count;
    return a;
}

double Approximant::domain_hi() const
{
    return lifts_ > 0 ? kInf : info().domain_hi;
}

template <Scalar T>
T Approximant::evaluate(const T& x) const
{
    if (lifts_ == 0)
        return evaluate_base(x);
    return lift_n([this](const T& u) { return evaluate_base(u); }, x, lifts_);
}

template <Scalar T>
T Approximant::evaluate_base(const T& x) const
{
    auto pick = [this](const BoundPair<T>& b) -> T { return side_ == Side::Upper ? b.upper : b.lower; };
    switch (family_) {
    case FamilyId::ShaferFink:
        return pick(shafer_fink_bounds(x));
    case FamilyId::Refined:
        return pick(refined_shafer_fink_bounds(x));
    case FamilyId::RadicalUpper:
        return radical_upper_bound(x);
    case FamilyId::Master:
        return pick(master_bounds(n_, x));
    case FamilyId::Lagrange:
        return lagrange_p(x);
    case FamilyId::LiftedLagrange:
        return lifted_lagrange(x);
    case FamilyId::Cheb:
        return cheb_arctan(n_, x);
    case FamilyId::ChebLifted:
        return cheb_lifted(n_, x);
    case FamilyId::Cf:
        return cf_arctan(n_, x);
    case FamilyId::CfLifted:
        return cf_lifted(n_, x);
    case FamilyId::TaylorS:
        return taylor1_s(n_, x);
    case FamilyId::TaylorT:
        return taylor1_t(n_, x);
    case FamilyId::Blend:
        return blend_w(n_, x);
    case FamilyId::BlendLifted:
        return blend_w_lifted(n_, x);
    case FamilyId::ChebScaled:
        return cheb_arctan_scaled(n_, T(m_), x);
    case FamilyId::Oracle:
        if constexpr (std::is_same_v<T, double>)
            return std::atan(x);
        else
            return reduced_arctan(x, default_digits());
    }
    throw std::logic_error("Approximant: unhandled family");
}

double Approximant::operator()(double x) const
{
    const double v = evaluate(x);
    return scale_ == 1.0 ? v : scale_ * v;
}

BigScalar Approximant::operator()(const BigScalar& x) const
{
    BigScalar v = evaluate(x);
    if (scale_ != 1.0)
        v *= scale_;
    return v;
}

std::optional<double> Approximant::claimed_bound() const
{
    // the lifted sup norm is twice the inner one on [0, 1)
    std::optional<double> base = base_claimed_bound();
    if (base)
        *base = std::ldexp(*base, static_cast<int>(lifts_));
    return base;
}

std::optional<double> Approximant::base_claimed_bound() const
{
    const double n = n_;
    switch (family_) {
    case FamilyId::ShaferFink:
        return 0.25 * std::numbers::pi / 2;
    case FamilyId::Refined:
        return std::pow(4.0, -2.0) * std::numbers::pi / 2
               / master_params(2).k_low.convert_to<double>();
    case FamilyId::Master:
        return std::pow(4.0, -n) * std::numbers::pi / 2
               / master_params(n_).k_low.convert_to<double>();
    case FamilyId::Lagrange:
        return 1.0 / 230;
    case FamilyId::LiftedLagrange:
        return 1.0 / 115;
    case FamilyId::Cheb:
        return std::pow(1 + std::numbers::sqrt2, -(2 * n + 3));
    case FamilyId::ChebLifted:
        return std::pow(3 + 2 * std::numbers::sqrt2, -n);
    case FamilyId::Cf:
        return 1 / (2 * std::pow(4.0, n));
    case FamilyId::CfLifted:
        return std::pow(4.0, -n);
    case FamilyId::TaylorS:
    case FamilyId::TaylorT:
        return std::pow(4.0, -n);
    case FamilyId::Blend:
        return std::pow(20.0, -n);
    case FamilyId::BlendLifted:
        return 2 * std::pow(20.0, -n);
    case FamilyId::RadicalUpper:
    case FamilyId::ChebScaled:
    case FamilyId::Oracle:
        return std::nullopt;
    }
    return std::nullopt;
}

std::string Approximant::label() const
{
    const FamilyInfo& i = info();
    std::string out(i.name);
    std::string args;
    if (i.needs_order)
        args += "n=" + std::to_string(n_);
    if (family_ == FamilyId::ChebScaled)
        args += ",m=" + std::to_string(m_);
    if (i.kind == BoundKind::TwoSided && side_ != Side::Value)
        args += (args.empty() ? "" : ",") + std::string(to_string(side_));
    if (scale_ != 1.0)
        args += (args.empty() ? "" : ",") + ("scale=" + std::to_string(scale_));
    if (lifts_ > 0)
        args += (args.empty() ? "" : ",") + ("lifts=" + std::to_string(lifts_));
    if (!args.empty())
        out += "(" + args + ")";
    return out;
}

} // namespace arctan_cert
