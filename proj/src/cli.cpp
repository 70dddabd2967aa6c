#include "arctan_cert/cli.hpp"

#include "arctan_cert/oracle.hpp"
#include "arctan_cert/series_approx.hpp"
#include "arctan_cert/verify.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace arctan_cert::cli {

namespace {

unsigned parse_unsigned(std::string_view s, std::string_view what)
{
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

double parse_double(std::string_view s, std::string_view what)
{
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

std::optional<double> parse_params(const std::vector<std::string>& params)
{
    std::optional<double> m;
    for (const auto& p : params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("parameter must look like key=value: '" + p + "'");
        const std::string key = p.substr(0, eq);
        if (key != "m")
            throw std::invalid_argument("unknown parameter '" + key + "'");
        m = parse_double(std::string_view(p).substr(eq + 1), "parameter m");
    }
    return m;
}

std::string format_big(const BigScalar& v, unsigned digits)
{
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

Interval default_interval(const Approximant& f)
{
    return f.domain_hi() == 1.0 ? Interval::closed(0.0, 1.0) : Interval::positive_reals();
}

std::string csv_row(const FamilySpec& spec, const ErrorReport& r)
{
    return fmt::format("{},{},{},{},{},{},{}", spec.family, spec.n ? std::to_string(*spec.n) : "",
                       r.interval.text(), format_scalar(r.sup_error), format_scalar(r.arg_max),
                       r.claimed_bound ? format_scalar(*r.claimed_bound) : "",
                       r.satisfied ? "true" : "false");
}

void print_report(std::ostream& out, const ErrorReport& r)
{
    out << fmt::format("family         {}\n", r.family);
    out << fmt::format("interval       {}\n", r.interval.text());
    out << fmt::format("kind           {}\n", to_string(r.bound_kind));
    out << fmt::format("sup_error      {}\n", format_scalar(r.sup_error));
    out << fmt::format("arg_max        {}\n", format_scalar(r.arg_max));
    out << fmt::format("claimed_bound  {}\n", r.claimed_bound ? format_scalar(*r.claimed_bound) : "-");
    if (r.bound_kind != BoundKind::Approximation) {
        out << fmt::format("min_gap        {}\n", format_scalar(r.min_gap));
        out << fmt::format("arg_min_gap    {}\n", format_scalar(r.arg_min_gap));
    }
    out << fmt::format("evaluations    {}\n", r.evaluations);
    out << fmt::format("satisfied      {}\n", r.satisfied ? "true" : "false");
}

struct CommonOptions {
    std::string family;
    std::optional<unsigned> n;
    std::vector<std::string> params;
    std::string format = "text";
};

void add_family_options(CLI::App* cmd, CommonOptions& o)
{
    cmd->add_option("--family", o.family, "Family identifier (see `list`)")->required();
    cmd->add_option("--n", o.n, "Order / truncation index");
    cmd->add_option("--param", o.params, "Extra parameter key=value (cheb: m)");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv"}));
}

FamilySpec spec_from(const CommonOptions& o)
{
    return FamilySpec{o.family, o.n, parse_params(o.params)};
}

int cmd_list(std::ostream& out)
{
    for (const auto& f : all_families()) {
        if (f.id == FamilyId::ChebScaled || f.id == FamilyId::Oracle)
            continue;
        out << f.name << "  " << f.reference << "  " << f.claim << "  " << f.domain_text << '\n';
    }
    return kSatisfied;
}

int cmd_eval(const CommonOptions& o, double x, std::ostream& out)
{
    const FamilySpec spec = spec_from(o);
    const OracleConfig cfg = OracleConfig::from_environment();
    cfg.validate();
    PrecisionScope scope(cfg.working_digits);

    const Approximant base = spec.approximant();
    const FamilyInfo& info = base.info();
    if (x < 0 || x > base.domain_hi())
        throw std::domain_error(fmt::format("x = {} lies outside the domain {} of '{}'", x, info.domain_text, info.name));

    const BigScalar bx(x);
    const BigScalar oracle = oracle_arctan(bx, cfg);

    struct Line {
        std::string side;
        BigScalar value;
        std::optional<bool> holds;
    };
    std::vector<Line> lines;
    switch (info.kind) {
    case BoundKind::TwoSided: {
        const BigScalar lo = base.with_side(Side::Lower)(bx);
        const BigScalar hi = base.with_side(Side::Upper)(bx);
        lines.push_back({"lower", lo, lo <= oracle});
        lines.push_back({"upper", hi, hi >= oracle});
        break;
    }
    case BoundKind::Upper: {
        const BigScalar v = base(bx);
        lines.push_back({"upper", v, v >= oracle});
        break;
    }
    case BoundKind::Lower: {
        const BigScalar v = base(bx);
        lines.push_back({"lower", v, v <= oracle});
        break;
    }
    case BoundKind::Approximation:
        lines.push_back({"value", base(bx), std::nullopt});
        break;
    }

    if (o.format == "csv") {
        out << "family,n,x,side,value,oracle,error,holds\n";
        for (const auto& l : lines) {
            const double err = BigScalar(l.value - oracle).convert_to<double>();
            out << fmt::format("{},{},{},{},{},{},{},{}\n", spec.family, spec.n ? std::to_string(*spec.n) : "",
                               format_scalar(x), l.side, format_scalar(l.value.convert_to<double>()),
                               format_scalar(oracle.convert_to<double>()), format_scalar(err),
                               l.holds ? (*l.holds ? "true" : "false") : "");
        }
        return kSatisfied;
    }

    out << fmt::format("family  {}\n", base.with_side(Side::Value).label());
    out << fmt::format("x       {}\n", format_scalar(x));
    for (const auto& l : lines)
        out << fmt::format("{:<7} {}\n", l.side, format_scalar(l.value.convert_to<double>()));
    out << fmt::format("oracle  {}\n", format_big(oracle, cfg.report_digits));
    for (const auto& l : lines) {
        const double err = BigScalar(l.value - oracle).convert_to<double>();
        std::string line = fmt::format("error   {} ({})", format_scalar(err), l.side);
        if (l.holds)
            line += *l.holds ? "  bound holds" : "  bound VIOLATED";
        out << line << '\n';
    }
    return kSatisfied;
}

int cmd_certify(const CommonOptions& o, const std::optional<std::string>& interval_text, unsigned grid,
                const std::optional<std::string>& kind, std::ostream& out)
{
    const FamilySpec spec = spec_from(o);
    const OracleConfig cfg = OracleConfig::from_environment();
    SamplingOptions options;
    options.grid_points = grid;

    Approximant f = spec.approximant();
    const Interval interval = interval_text ? Interval::parse(*interval_text) : default_interval(f);

    ErrorReport r;
    if (kind) {
        const BoundKind k = *kind == "lower" ? BoundKind::Lower : BoundKind::Upper;
        if (f.info().kind == BoundKind::TwoSided)
            f = f.with_side(k == BoundKind::Lower ? Side::Lower : Side::Upper);
        r = certify_bound(f, k, interval, options, cfg);
    } else {
        r = certify_family(f, interval, options, cfg);
    }

    if (o.format == "csv")
        out << kCsvHeader << '\n' << csv_row(spec, r) << '\n';
    else
        print_report(out, r);
    return r.satisfied ? kSatisfied : kViolated;
}

int cmd_table(const std::vector<std::string>& family_args, const std::optional<std::string>& interval_text,
              unsigned grid, const std::optional<std::string>& output, std::ostream& out)
{
    std::vector<FamilySpec> specs;
    for (const auto& arg : family_args) {
        std::string_view rest(arg);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string_view item = rest.substr(0, comma);
            if (!item.empty()) {
                auto parsed = parse_family_range(item);
                specs.insert(specs.end(), parsed.begin(), parsed.end());
            }
            rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
        }
    }
    if (specs.empty())
        throw std::invalid_argument("table: no families given");
    std::stable_sort(specs.begin(), specs.end(), [](const FamilySpec& a, const FamilySpec& b) {
        if (a.family != b.family)
            return a.family < b.family;
        return a.n.value_or(0) < b.n.value_or(0);
    });

    const OracleConfig cfg = OracleConfig::from_environment();
    SamplingOptions options;
    options.grid_points = grid;
    const std::optional<Interval> shared = interval_text ? std::optional(Interval::parse(*interval_text)) : std::nullopt;

    // validate every spec before any certification runs
    std::vector<Approximant> approximants;
    for (const auto& s : specs) {
        approximants.push_back(s.approximant());
        if (shared && shared->hi > approximants.back().domain_hi())
            throw std::domain_error(s.family + ": interval " + shared->text() + " exceeds the family's domain");
    }

    std::ofstream file;
    if (output) {
        file.open(*output, std::ios::out | std::ios::binary | std::ios::trunc);
        if (!file)
            throw std::runtime_error("cannot open '" + *output + "' for writing");
    }
    std::ostream& sink = output ? static_cast<std::ostream&>(file) : out;

    bool all_satisfied = true;
    sink << kCsvHeader << '\n';
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const Interval interval = shared ? *shared : default_interval(approximants[i]);
        const ErrorReport r = certify_family(approximants[i], interval, options, cfg);
        all_satisfied = all_satisfied && r.satisfied;
        sink << csv_row(specs[i], r) << '\n';
    }
    sink.flush();
    if (!sink)
        throw std::runtime_error("write failed");
    return all_satisfied ? kSatisfied : kViolated;
}

int cmd_pi(unsigned terms, unsigned digits, std::ostream& out)
{
    const OracleConfig cfg = OracleConfig::from_environment();
    cfg.validate();
    if (terms == 0)
        throw std::invalid_argument("pi: --terms must be positive");
    if (digits == 0 || digits > cfg.report_digits)
        throw std::invalid_argument(fmt::format("pi: --digits must lie in [1, {}]", cfg.report_digits));
    const BigScalar value = machin_pi(terms, cfg.working_digits);
    const BigScalar err = abs(value - pi_big(cfg.working_digits));
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << value;
    out << fmt::format("pi     {}\n", os.str());
    out << fmt::format("terms  {}\n", terms);
    out << fmt::format("error  {:.3e}\n", err.convert_to<double>());
    return kSatisfied;
}

} // namespace

Approximant FamilySpec::approximant(Side side) const
{
    const FamilyInfo& info = family_info(family);
    if (info.id == FamilyId::ChebScaled || info.id == FamilyId::Oracle)
        throw std::invalid_argument("unknown family '" + family + "'");
    if (m) {
        if (info.id != FamilyId::Cheb)
            throw std::invalid_argument("parameter m applies to family 'cheb' only");
        if (!n)
            throw std::invalid_argument("family 'cheb' requires an order n");
        return Approximant::cheb_scaled(*n, *m);
    }
    if (info.kind == BoundKind::TwoSided && side == Side::Value)
        side = Side::Lower;
    return Approximant(info.id, n, side);
}

std::vector<FamilySpec> parse_family_range(std::string_view text)
{
    const auto colon = text.find(':');
    const std::string name(text.substr(0, colon));
    if (name.empty())
        throw std::invalid_argument("empty family name");
    if (colon == std::string_view::npos)
        return {FamilySpec{name, std::nullopt, std::nullopt}};
    const std::string_view range = text.substr(colon + 1);
    const auto dots = range.find("..");
    if (dots == std::string_view::npos) {
        const unsigned n = parse_unsigned(range, "order");
        return {FamilySpec{name, n, std::nullopt}};
    }
    const unsigned a = parse_unsigned(range.substr(0, dots), "order");
    const unsigned b = parse_unsigned(range.substr(dots + 2), "order");
    if (b < a)
        throw std::invalid_argument("empty order range '" + std::string(range) + "'");
    std::vector<FamilySpec> out;
    for (unsigned n = a; n <= b; ++n)
        out.push_back(FamilySpec{name, n, std::nullopt});
    return out;
}

std::string format_scalar(double v)
{
    return fmt::format("{:.16e}", v);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Arctangent approximations with sampled certification of their error bounds",
                 "arctan-cert"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "List approximation families");

    CommonOptions eval_opts;
    double x = 0;
    auto* eval = app.add_subcommand("eval", "Evaluate one approximant against the oracle");
    add_family_options(eval, eval_opts);
    eval->add_option("--x", x, "Argument")->required();

    CommonOptions cert_opts;
    std::optional<std::string> cert_interval;
    std::optional<std::string> cert_kind;
    unsigned cert_grid = 4097;
    auto* certify = app.add_subcommand("certify", "Certify one family's claimed bound");
    add_family_options(certify, cert_opts);
    certify->add_option("--interval", cert_interval, "lo:hi, hi may be inf");
    certify->add_option("--grid", cert_grid, "Grid points")->check(CLI::Range(64u, 1u << 22));
    certify->add_option("--kind", cert_kind, "Check a single bound direction")
        ->check(CLI::IsMember({"lower", "upper"}));

    std::vector<std::string> table_families;
    std::optional<std::string> table_interval;
    std::optional<std::string> table_output;
    unsigned table_grid = 4097;
    auto* table = app.add_subcommand("table", "Write a CSV table of certifications");
    table->add_option("--families", table_families, "e.g. master:1..6,cf:1..8,sf");
    table->add_option("--interval", table_interval, "lo:hi, hi may be inf");
    table->add_option("--grid", table_grid, "Grid points")->check(CLI::Range(64u, 1u << 22));
    table->add_option("--output", table_output, "CSV path (default: stdout)");

    unsigned pi_terms = 0;
    unsigned pi_digits = 20;
    auto* pi_cmd = app.add_subcommand("pi", "Evaluate the Machin series for pi");
    pi_cmd->add_option("--terms", pi_terms, "Rows of the series")->required();
    pi_cmd->add_option("--digits", pi_digits, "Decimals to print");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? kSatisfied : kUsage;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err) == 0 ? kSatisfied : kUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (list->parsed())
            return cmd_list(out);
        if (eval->parsed())
            return cmd_eval(eval_opts, x, out);
        if (certify->parsed())
            return cmd_certify(cert_opts, cert_interval, cert_grid, cert_kind, out);
        if (table->parsed())
            return cmd_table(table_families, table_interval, table_grid, table_output, out);
        if (pi_cmd->parsed())
            return cmd_pi(pi_terms, pi_digits, out);
    } catch (const std::exception& e) {
        err << "arctan-cert: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace arctan_cert::cli
