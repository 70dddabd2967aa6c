#include "arctan_cert/verify.hpp"

#include "arctan_cert/approx_core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace arctan_cert {

namespace {

constexpr double kAngleMargin = 1e-8;
constexpr int kMaxGoldenIterations = 200;

double parse_endpoint(std::string_view s)
{
    if (s == "inf" || s == "+inf" || s == "infinity")
        return std::numeric_limits<double>::infinity();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad interval endpoint '" + std::string(s) + "'");
    return v;
}

std::string format_endpoint(double v)
{
    if (std::isinf(v))
        return "inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

unsigned thread_count(const SamplingOptions& options, std::size_t work)
{
    unsigned t = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    if (t == 0)
        t = 1;
    return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work / 64, 1)));
}

// Evaluates fn at every abscissa; the output order matches the input.
template <typename Fn>
std::vector<double> evaluate_all(const std::vector<double>& xs, const Fn& fn, const SamplingOptions& options)
{
    std::vector<double> out(xs.size());
    const unsigned threads = thread_count(options, xs.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < xs.size(); ++i)
            out[i] = fn(xs[i]);
        return out;
    }
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < xs.size(); i += threads)
                        out[i] = fn(xs[i]);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

struct Extremum {
    double x = 0.0;
    double value = -std::numeric_limits<double>::infinity();
};

template <typename Fn>
Extremum golden_max(const Fn& fn, double a, double b, double tol, std::size_t& evals)
{
    constexpr double inv_phi = 0.6180339887498949;
    Extremum best;
    auto probe = [&](double x) {
        const double v = fn(x);
        ++evals;
        if (v > best.value)
            best = {x, v};
        return v;
    };
    double c = b - (b - a) * inv_phi;
    double d = a + (b - a) * inv_phi;
    double fc = probe(c);
    double fd = probe(d);
    for (int it = 0; it < kMaxGoldenIterations; ++it) {
        if (b - a < tol * std::max(1.0, std::abs(c)))
            break;
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * inv_phi;
            fc = probe(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * inv_phi;
            fd = probe(d);
        }
    }
    return best;
}

// Largest value of fn over the samples, refined by golden section around the
// `peaks` highest local maxima.
template <typename Fn>
Extremum refine_max(const Fn& fn, const std::vector<double>& xs, const std::vector<double>& values,
                    const SamplingOptions& options, std::size_t& evals)
{
    Extremum best;
    std::vector<std::size_t> maxima;
    const std::size_t n = xs.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] > best.value)
            best = {xs[i], values[i]};
        const bool left = i == 0 || values[i] >= values[i - 1];
        const bool right = i + 1 == n || values[i] >= values[i + 1];
        if (left && right)
            maxima.push_back(i);
    }
    std::stable_sort(maxima.begin(), maxima.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    if (maxima.size() > options.refine_peaks)
        maxima.resize(options.refine_peaks);
    for (std::size_t i : maxima) {
        const double a = xs[i == 0 ? 0 : i - 1];
        const double b = xs[i + 1 == n ? i : i + 1];
        if (!(b > a))
            continue;
        const Extremum e = golden_max(fn, a, b, options.refine_tol, evals);
        if (e.value > best.value)
            best = e;
    }
    return best;
}

void require_in_domain(const Approximant& f, const Interval& interval)
{
    interval.validate();
    if (interval.hi > f.domain_hi())
        throw std::domain_error(f.label() + ": interval " + interval.text()
                                + " exceeds the family's domain");
}

BigScalar at_default(double x)
{
    return BigScalar(x);
}

} // namespace

Interval Interval::parse(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("interval must look like lo:hi");
    Interval iv;
    iv.lo = parse_endpoint(text.substr(0, colon));
    iv.hi = parse_endpoint(text.substr(colon + 1));
    iv.lo_open = false;
    iv.hi_open = iv.unbounded();
    iv.validate();
    return iv;
}

void Interval::validate() const
{
    if (!std::isfinite(lo) || lo < 0)
        throw std::domain_error("interval: lower end must be finite and non-negative");
    if (std::isnan(hi) || !(hi > lo))
        throw std::domain_error("interval: upper end must exceed the lower end");
}

std::string Interval::text() const
{
    return format_endpoint(lo) + ":" + format_endpoint(hi);
}

std::vector<double> sample_points(const Interval& interval, unsigned grid_points)
{
    interval.validate();
    if (grid_points < 64)
        throw std::invalid_argument("sample_points: at least 64 grid points required");
    std::vector<double> xs;
    const double n1 = grid_points - 1;

    if (interval.unbounded() || interval.hi > 1) {
        const double t0 = interval.lo > 0 ? std::atan(interval.lo) : kAngleMargin;
        const double t1 = interval.unbounded() ? std::numbers::pi / 2 - kAngleMargin : std::atan(interval.hi);
        for (unsigned i = 0; i < grid_points; ++i)
            xs.push_back(std::tan(t0 + (t1 - t0) * (i / n1)));
    }
    if (!interval.unbounded()) {
        const double lo = interval.lo;
        const double hi = interval.hi;
        for (unsigned i = 0; i < grid_points; ++i)
            xs.push_back(lo + (hi - lo) * (i / n1));
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        for (unsigned k = 0; k < grid_points; ++k)
            xs.push_back(mid + half * std::cos((2.0 * k + 1) * std::numbers::pi / (2.0 * grid_points)));
    } else if (!interval.lo_open) {
        xs.push_back(interval.lo);
    }

    std::erase_if(xs, [&](double x) {
        if (!(x >= interval.lo) || !(x <= interval.hi))
            return true;
        return (interval.lo_open && x == interval.lo) || (interval.hi_open && x == interval.hi);
    });
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

ErrorReport sup_error(const Approximant& f, const Interval& interval, std::optional<double> claimed_bound,
                      const SamplingOptions& options, const OracleConfig& cfg)
{
    cfg.validate();
    require_in_domain(f, interval);
    PrecisionScope scope(cfg.working_digits);

    auto metric = [&](double x) {
        const BigScalar bx = at_default(x);
        const BigScalar diff = f(bx) - oracle_arctan(bx, cfg);
        return abs(diff).convert_to<double>();
    };
    const std::vector<double> xs = sample_points(interval, options.grid_points);
    const std::vector<double> values = evaluate_all(xs, metric, options);

    ErrorReport r;
    r.family = f.label();
    r.interval = interval;
    r.evaluations = xs.size();
    const Extremum best = refine_max(metric, xs, values, options, r.evaluations);
    r.sup_error = best.value;
    r.arg_max = best.x;
    r.claimed_bound = claimed_bound;
    r.bound_kind = BoundKind::Approximation;
    r.satisfied = !claimed_bound || r.sup_error <= *claimed_bound;
    return r;
}

ErrorReport certify_bound(const Approximant& f, BoundKind kind, const Interval& interval,
                          const SamplingOptions& options, const OracleConfig& cfg)
{
    if (kind != BoundKind::Lower && kind != BoundKind::Upper)
        throw std::invalid_argument("certify_bound: kind must be lower or upper");
    cfg.validate();
    require_in_domain(f, interval);
    PrecisionScope scope(cfg.working_digits);

    const bool upper = kind == BoundKind::Upper;
    // signed margin: positive when the bound holds
    auto gap = [&](double x) {
        const BigScalar bx = at_default(x);
        const BigScalar fx = f(bx);
        const BigScalar ox = oracle_arctan(bx, cfg);
        const BigScalar d = upper ? BigScalar(fx - ox) : BigScalar(ox - fx);
        return d.convert_to<double>();
    };
    auto neg_gap = [&](double x) { return -gap(x); };

    const std::vector<double> xs = sample_points(interval, options.grid_points);
    const std::vector<double> gaps = evaluate_all(xs, gap, options);

    ErrorReport r;
    r.family = f.label();
    r.interval = interval;
    r.bound_kind = kind;
    r.evaluations = xs.size();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (std::abs(gaps[i]) > r.sup_error) {
            r.sup_error = std::abs(gaps[i]);
            r.arg_max = xs[i];
        }
    }
    std::vector<double> negated(gaps.size());
    std::transform(gaps.begin(), gaps.end(), negated.begin(), [](double g) { return -g; });
    const Extremum worst = refine_max(neg_gap, xs, negated, options, r.evaluations);
    r.min_gap = -worst.value;
    r.arg_min_gap = worst.x;
    r.satisfied = r.min_gap >= -cfg.noise_floor();
    return r;
}

ErrorReport certify_family(const Approximant& f, const Interval& interval, const SamplingOptions& options,
                           const OracleConfig& cfg)
{
    const FamilyInfo& info = f.info();
    switch (info.kind) {
    case BoundKind::Approximation:
        return sup_error(f, interval, f.claimed_bound(), options, cfg);
    case BoundKind::Lower:
    case BoundKind::Upper: {
        ErrorReport r = certify_bound(f, info.kind, interval, options, cfg);
        r.claimed_bound = f.claimed_bound();
        if (r.claimed_bound)
            r.satisfied = r.satisfied && r.sup_error <= *r.claimed_bound;
        return r;
    }
    case BoundKind::TwoSided:
        break;
    }

    const Approximant lower = f.with_side(Side::Lower);
    const Approximant upper = f.with_side(Side::Upper);
    const ErrorReport lo = certify_bound(lower, BoundKind::Lower, interval, options, cfg);
    const ErrorReport hi = certify_bound(upper, BoundKind::Upper, interval, options, cfg);

    cfg.validate();
    PrecisionScope scope(cfg.working_digits);
    auto width = [&](double x) {
        const BigScalar bx = at_default(x);
        const BigScalar w = upper(bx) - lower(bx);
        return w.convert_to<double>();
    };
    const std::vector<double> xs = sample_points(interval, options.grid_points);
    const std::vector<double> widths = evaluate_all(xs, width, options);

    ErrorReport r;
    r.family = f.with_side(Side::Value).label();
    r.interval = interval;
    r.bound_kind = BoundKind::TwoSided;
    r.evaluations = lo.evaluations + hi.evaluations + xs.size();
    const Extremum widest = refine_max(width, xs, widths, options, r.evaluations);
    r.sup_error = widest.value;
    r.arg_max = widest.x;
    r.claimed_bound = f.claimed_bound();
    if (lo.min_gap <= hi.min_gap) {
        r.min_gap = lo.min_gap;
        r.arg_min_gap = lo.arg_min_gap;
    } else {
        r.min_gap = hi.min_gap;
        r.arg_min_gap = hi.arg_min_gap;
    }
    r.satisfied = lo.satisfied && hi.satisfied && (!r.claimed_bound || r.sup_error <= *r.claimed_bound);
    return r;
}

NormTransfer measure_norm_transfer(const Approximant& f, double t, const SamplingOptions& options,
                                   const OracleConfig& cfg)
{
    NormTransfer out;
    out.outer_hi = lift_interval_map(t);
    out.inner_sup = sup_error(f, Interval::closed(0.0, t), std::nullopt, options, cfg).sup_error;
    out.outer_sup = sup_error(f.lifted(), Interval::closed(0.0, out.outer_hi), std::nullopt, options, cfg).sup_error;
    const double twice_inner = 2 * out.inner_sup;
    const double scale = std::max(twice_inner, out.outer_sup);
    out.agrees = scale <= cfg.noise_floor() || std::abs(out.outer_sup - twice_inner) <= 0.01 * scale;
    return out;
}

bool norm_transfer_check(const Approximant& f, double t, const SamplingOptions& options, const OracleConfig& cfg)
{
    return measure_norm_transfer(f, t, options, cfg).agrees;
}

} // namespace arctan_cert
