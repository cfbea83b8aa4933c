#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubicvar/decomp.hpp"
#include "cubicvar/harness.hpp"
#include "cubicvar/jacobsthal.hpp"
#include "cubicvar/stats.hpp"
#include "cubicvar/theorems.hpp"

namespace py = pybind11;
using namespace cubicvar;

namespace {

py::object to_fraction(const ExactRational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    auto as_int = [](const BigInt& v) { return py::int_(py::str(v.str())); };
    return fraction(as_int(r.num()), as_int(r.den()));
}

py::object closed_value(const ClosedFormValue& v) {
    if (v.is_exact()) return py::int_(v.value());
    const auto [hi, lo] = v.candidates();
    return py::make_tuple(hi, lo);
}

FamilySpec family(std::uint64_t p, const std::string& tag, const std::vector<std::int64_t>& params) {
    if (tag.size() != 1) throw Error(ErrorKind::InvalidConfig, "family is a single tag");
    const PrimeContext ctx = make_context(p);
    const FamilyKind kind = family_from_tag(tag[0]);
    if (params.size() != family_param_names(kind).size()) {
        throw Error(ErrorKind::InvalidConfig, "wrong number of parameters for family " + tag);
    }
    std::vector<std::uint64_t> residues;
    for (auto v : params) residues.push_back(ctx.reduce(v));
    return FamilySpec::make(ctx, kind, residues);
}

py::dict closed_form_dict(const ClosedFormVariance& cf) {
    py::dict residuals;
    for (const auto& r : cf.residuals) residuals[py::str(r.name)] = r.value;
    py::dict out;
    out["value"] = to_fraction(cf.value);
    out["formula"] = to_string(cf.formula);
    out["residuals"] = residuals;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact point-count variances for one-parameter cubic families over F_p";

    static py::exception<Error> error(m, "CubicvarError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr ptr) {
        try {
            if (ptr) std::rethrow_exception(ptr);
        } catch (const Error& e) {
            py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    m.def("is_prime", &is_prime, py::arg("n"));
    m.def(
        "legendre", [](std::int64_t a, std::uint64_t p) { return legendre(FpElem(make_context(p), a)).v; },
        py::arg("a"), py::arg("p"));
    m.def(
        "sqrt_mod",
        [](std::int64_t a, std::uint64_t p) -> std::optional<std::uint64_t> {
            auto r = sqrt_mod(FpElem(make_context(p), a));
            if (!r) return std::nullopt;
            return r->value();
        },
        py::arg("a"), py::arg("p"));
    m.def(
        "two_square",
        [](std::uint64_t p) {
            const auto d = two_square(make_context(p));
            return py::make_tuple(d.a2, d.b2);
        },
        py::arg("p"), "(A2, B2) with p = A2^2 + B2^2, A2 = -1 mod 4, B2 > 0");
    m.def(
        "eisenstein",
        [](std::uint64_t p) {
            const auto d = eisenstein(make_context(p));
            return py::make_tuple(d.a3, d.b3);
        },
        py::arg("p"), "(A3, B3) with p = A3^2 + 3 B3^2, A3 = -1 mod 3, B3 > 0");

    m.def(
        "phi2", [](std::int64_t c, std::uint64_t p) { return phi2_brute(FpElem(make_context(p), c)); },
        py::arg("c"), py::arg("p"));
    m.def(
        "psi3", [](std::int64_t c, std::uint64_t p) { return psi3_brute(FpElem(make_context(p), c)); },
        py::arg("c"), py::arg("p"));
    m.def(
        "rho", [](std::int64_t c, std::uint64_t p) { return rho_brute(FpElem(make_context(p), c)); },
        py::arg("c"), py::arg("p"));
    m.def(
        "phi2_closed",
        [](std::int64_t c, std::uint64_t p) { return closed_value(phi2_closed(FpElem(make_context(p), c))); },
        py::arg("c"), py::arg("p"), "int when exact, else the pair of candidates");
    m.def(
        "psi3_closed",
        [](std::int64_t c, std::uint64_t p) { return closed_value(psi3_closed(FpElem(make_context(p), c))); },
        py::arg("c"), py::arg("p"), "int when exact, else the pair of candidates");

    m.def(
        "fiber_sums",
        [](const std::string& tag, const std::vector<std::int64_t>& params, std::uint64_t p) {
            return fiber_sum_vector(family(p, tag, params)).values;
        },
        py::arg("family"), py::arg("params"), py::arg("p"));
    m.def(
        "variance",
        [](const std::string& tag, const std::vector<std::int64_t>& params, std::uint64_t p) {
            return to_fraction(variance(fiber_sum_vector(family(p, tag, params))));
        },
        py::arg("family"), py::arg("params"), py::arg("p"), "brute-force variance as a Fraction");
    m.def(
        "closed_form",
        [](const std::string& tag, const std::vector<std::int64_t>& params, std::uint64_t p) -> py::object {
            const auto cf = closed_form_for(family(p, tag, params));
            if (!cf) return py::none();
            return closed_form_dict(*cf);
        },
        py::arg("family"), py::arg("params"), py::arg("p"),
        "dict with value, formula and residuals, or None when no closed form applies");

    m.def(
        "verify",
        [](std::uint64_t pmin, std::uint64_t pmax, const std::string& families, const std::string& grid,
           std::uint64_t seed, unsigned threads, const std::string& format) {
            SweepConfig cfg;
            cfg.p_min = pmin;
            cfg.p_max = pmax;
            cfg.families = parse_families(families);
            cfg.grid = parse_grid(grid, seed);
            cfg.threads = threads;
            if (format != "csv" && format != "json") throw Error(ErrorKind::InvalidConfig, "format is csv or json");
            SweepResult result;
            {
                py::gil_scoped_release release;
                result = run_sweep(cfg);
            }
            std::ostringstream os;
            if (format == "csv") {
                write_csv(os, cfg, result);
            } else {
                write_json(os, cfg, result);
            }
            const auto& s = result.summary;
            py::dict summary;
            summary["rows"] = s.rows;
            summary["matches"] = s.matches;
            summary["mismatches"] = s.mismatches;
            summary["no_closed_form"] = s.no_closed_form;
            summary["errors"] = s.errors;
            summary["ok"] = s.ok();
            return py::make_tuple(summary, os.str());
        },
        py::arg("pmin") = 5, py::arg("pmax") = 61, py::arg("families") = "C,B,A,D,T", py::arg("grid") = "full",
        py::arg("seed") = 1, py::arg("threads") = 0, py::arg("format") = "csv",
        "run a sweep; returns (summary dict, report text)");
}
