#include "arctan_cert/approx_core.hpp"
#include "arctan_cert/approximant.hpp"
#include "arctan_cert/master_family.hpp"
#include "arctan_cert/oracle.hpp"
#include "arctan_cert/series_approx.hpp"
#include "arctan_cert/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <iomanip>
#include <sstream>

namespace py = pybind11;
using namespace arctan_cert;

namespace {

std::string big_text(const BigScalar& v, unsigned digits)
{
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

std::pair<double, double> pair_of(const BoundPair<double>& b)
{
    return {b.lower, b.upper};
}

Approximant make(const std::string& family, std::optional<unsigned> n, const std::string& side)
{
    const FamilyInfo& info = family_info(family);
    Side s = Side::Value;
    if (side == "lower")
        s = Side::Lower;
    else if (side == "upper")
        s = Side::Upper;
    else if (side != "value")
        throw std::invalid_argument("side must be 'value', 'lower' or 'upper'");
    if (info.kind == BoundKind::TwoSided && s == Side::Value)
        s = Side::Lower;
    return Approximant(info.id, n, s);
}

py::dict report_dict(const ErrorReport& r)
{
    py::dict d;
    d["family"] = r.family;
    d["interval"] = r.interval.text();
    d["sup_error"] = r.sup_error;
    d["arg_max"] = r.arg_max;
    d["claimed_bound"] = r.claimed_bound;
    d["kind"] = std::string(to_string(r.bound_kind));
    d["satisfied"] = r.satisfied;
    d["min_gap"] = r.min_gap;
    d["evaluations"] = r.evaluations;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Arctangent approximations and their certification";

    py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

    m.def("shafer_fink_bounds", [](double x) { return pair_of(shafer_fink_bounds(x)); }, py::arg("x"));
    m.def("refined_shafer_fink_bounds", [](double x) { return pair_of(refined_shafer_fink_bounds(x)); },
          py::arg("x"));
    m.def("radical_upper_bound", &radical_upper_bound<double>, py::arg("x"));
    m.def("lagrange_p", &lagrange_p<double>, py::arg("u"));
    m.def("lifted_lagrange", &lifted_lagrange<double>, py::arg("x"));
    m.def("a_n", &a_n<double>, py::arg("n"), py::arg("x"));
    m.def("master_bounds", [](unsigned n, double x) { return pair_of(master_bounds(n, x)); }, py::arg("n"),
          py::arg("x"));
    m.def("cheb_arctan", &cheb_arctan<double>, py::arg("n"), py::arg("x"));
    m.def("cheb_arctan_scaled", &cheb_arctan_scaled<double>, py::arg("n"), py::arg("m"), py::arg("x"));
    m.def("cf_arctan", &cf_arctan<double>, py::arg("n"), py::arg("x"));
    m.def("taylor1_s", &taylor1_s<double>, py::arg("n"), py::arg("u"));
    m.def("taylor1_t", &taylor1_t<double>, py::arg("n"), py::arg("u"));
    m.def("blend_w", &blend_w<double>, py::arg("n"), py::arg("u"));
    m.def("blend_w_lifted", &blend_w_lifted<double>, py::arg("n"), py::arg("x"));

    m.def(
        "pn_coefficients",
        [](unsigned n) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& c : pn_coefficients(n))
                out.emplace_back(numerator(c).str(), denominator(c).str());
            return out;
        },
        py::arg("n"), "Exact coefficients as (numerator, denominator) strings, constant term first.");

    m.def(
        "machin_pi",
        [](unsigned terms, unsigned digits) {
            PrecisionScope scope(digits + 10);
            return big_text(machin_pi(terms, digits + 10), digits);
        },
        py::arg("terms"), py::arg("digits") = 30);

    m.def(
        "oracle_arctan",
        [](const std::string& x, unsigned digits) {
            OracleConfig cfg;
            cfg.report_digits = digits;
            cfg.working_digits = digits + 20;
            PrecisionScope scope(cfg.working_digits);
            return big_text(oracle_arctan(BigScalar(x), cfg), digits);
        },
        py::arg("x"), py::arg("digits") = 30, "atan(x) as a decimal string; x is parsed exactly.");

    m.def(
        "families",
        [] {
            std::vector<std::string> out;
            for (const auto& f : all_families())
                if (f.id != FamilyId::Oracle && f.id != FamilyId::ChebScaled)
                    out.emplace_back(f.name);
            return out;
        });

    m.def(
        "evaluate",
        [](const std::string& family, double x, std::optional<unsigned> n, const std::string& side) {
            return make(family, n, side)(x);
        },
        py::arg("family"), py::arg("x"), py::arg("n") = py::none(), py::arg("side") = "value");

    m.def(
        "certify",
        [](const std::string& family, std::optional<unsigned> n, const std::string& interval, unsigned grid) {
            SamplingOptions opts;
            opts.grid_points = grid;
            const Approximant f = make(family, n, "value");
            const Interval iv = Interval::parse(interval);
            ErrorReport r;
            {
                py::gil_scoped_release release;
                r = certify_family(f, iv, opts, OracleConfig{});
            }
            return report_dict(r);
        },
        py::arg("family"), py::arg("n") = py::none(), py::arg("interval") = "0:1", py::arg("grid") = 1025);
}
