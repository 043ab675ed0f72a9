#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fsplit/forms.hpp"
#include "fsplit/ideal.hpp"
#include "fsplit/parser.hpp"
#include "fsplit/report.hpp"
#include "fsplit/residue.hpp"
#include "fsplit/splitting.hpp"

namespace py = pybind11;
using namespace fsplit;

namespace {

// RingPtr points at a const context, which pybind11 holders cannot hold directly.
struct Ring {
    RingPtr ptr;
};

CompatMethod parse_method(const std::string& name) {
    if (name == "fedder") return CompatMethod::Fedder;
    if (name == "finite") return CompatMethod::Finite;
    if (name == "both") return CompatMethod::Both;
    throw InvalidArgument("unknown method '" + name + "' (expected fedder, finite or both)");
}

IdealPresentation make_ideal(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    return IdealPresentation(ring, gens);
}

std::vector<std::string> render(const std::vector<Polynomial>& polys) {
    std::vector<std::string> out;
    for (const auto& f : polys) out.push_back(f.to_string());
    return out;
}

py::dict chain_dict(const ResidueChain& chain) {
    const auto& names = chain.initial.ring()->variables();
    py::list steps;
    for (const auto& s : chain.steps) steps.append(py::make_tuple(names[s.variable], s.result.to_string()));
    py::dict d;
    d["steps"] = steps;
    d["terminal"] = chain.terminal.residue();
    return d;
}

}  // namespace

PYBIND11_MODULE(_fsplit, m) {
    m.doc() = "Frobenius splittings of polynomial rings over F_p";

    static auto* error = new py::exception<Error>(m, "FsplitError");
    py::register_exception_translator([](std::exception_ptr e) {
        try {
            if (e) std::rethrow_exception(e);
        } catch (const Error& err) {
            py::set_error(*error, (std::string(err.kind()) + ": " + err.what()).c_str());
        }
    });

    py::class_<Ring>(m, "Ring")
        .def(py::init([](std::uint64_t p, std::vector<std::string> vars) { return Ring{make_ring(p, std::move(vars))}; }),
             py::arg("p"), py::arg("variables"))
        .def_property_readonly("p", [](const Ring& r) { return r.ptr->p(); })
        .def_property_readonly("variables", [](const Ring& r) { return r.ptr->variables(); })
        .def("parse", [](const Ring& r, const std::string& text) { return parse_polynomial(text, r.ptr); })
        .def("__repr__", [](const Ring& r) {
            std::string vars;
            for (const auto& v : r.ptr->variables()) vars += (vars.empty() ? "" : ",") + v;
            return "Ring(F_" + std::to_string(r.ptr->p()) + "[" + vars + "])";
        });

    py::class_<Polynomial>(m, "Polynomial")
        .def_property_readonly("ring", [](const Polynomial& f) { return Ring{f.ring()}; })
        .def("is_zero", &Polynomial::is_zero)
        .def("__len__", &Polynomial::size)
        .def("__str__", &Polynomial::to_string)
        .def("__repr__", [](const Polynomial& f) { return "Polynomial('" + f.to_string() + "')"; })
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
        .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
        .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
        .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
        .def("__neg__", [](const Polynomial& a) { return -a; })
        .def("__pow__", [](const Polynomial& a, std::uint64_t e) { return pow(a, e); })
        .def("__hash__", [](const Polynomial& f) { return py::hash(py::str(f.to_string())); });

    m.def("sigma0", &sigma0, py::arg("f"));
    m.def("apply", [](const Polynomial& coeff, const Polynomial& g) { return endo_apply(TwistedEndo(coeff), g); },
          py::arg("coeff"), py::arg("g"), "Applies coeff * sigma0 to g.");

    m.def(
        "check_splitting",
        [](const Polynomial& coeff, bool fastpath) {
            TwistedEndo s(coeff);
            SplitVerdict v = fastpath ? homogeneous_fastpath(s) : check_splitting(s);
            py::dict d;
            d["verdict"] = v.name();
            d["constant"] = v.constant ? py::cast(v.constant->residue()) : py::none();
            d["witness"] = v.witness ? py::cast(v.witness->to_string()) : py::none();
            return d;
        },
        py::arg("coeff"), py::arg("fastpath") = false);

    m.def("d_splitting_check", [](const Polynomial& coeff, const Polynomial& h) {
        return d_splitting_check(TwistedEndo(coeff), h);
    }, py::arg("coeff"), py::arg("divisor"));

    m.def(
        "is_compatible",
        [](const Polynomial& coeff, const std::vector<Polynomial>& gens, const std::string& method) {
            return is_compatible(TwistedEndo(coeff), make_ideal(coeff.ring(), gens), parse_method(method));
        },
        py::arg("coeff"), py::arg("ideal"), py::arg("method") = "both");

    m.def("fedder_module", [](const Ring& r, const std::vector<Polynomial>& gens) {
        return fedder_module(make_ideal(r.ptr, gens)).generators();
    }, py::arg("ring"), py::arg("ideal"));

    m.def(
        "exists_compatible_splitting",
        [](const Ring& r, const std::vector<Polynomial>& gens) {
            auto e = exists_compatible_splitting(make_ideal(r.ptr, gens));
            return py::make_tuple(e.exists, render(e.obstruction.basis()));
        },
        py::arg("ring"), py::arg("ideal"), "Returns (exists, Groebner basis of the obstruction ideal).");

    m.def("nilpotent_witness", [](const Polynomial& g, const std::vector<Polynomial>& gens, unsigned bound) {
        return nilpotent_witness(g, make_ideal(g.ring(), gens), bound);
    }, py::arg("g"), py::arg("ideal"), py::arg("bound") = 4);

    m.def("residue_step", &residue_step, py::arg("f"), py::arg("variable"));
    m.def("certify_chain", [](const Polynomial& f, const std::vector<std::size_t>& order) {
        return chain_dict(certify_chain(f, order));
    }, py::arg("f"), py::arg("order"));
    m.def("search_chain", [](const Polynomial& f) -> py::object {
        auto chain = search_chain(f);
        if (!chain) return py::none();
        return chain_dict(*chain);
    }, py::arg("f"));
    m.def("origin_coefficient", [](const Polynomial& f) { return origin_coefficient(f).residue(); }, py::arg("f"));

    m.def("matrix_ring", [](unsigned n, std::uint64_t p) { return Ring{matrix_ring(n, p)}; }, py::arg("n"), py::arg("p"));
    m.def("matrix_factors", [](unsigned n, const Ring& r) { return matrix_factors(n, r.ptr); }, py::arg("n"),
          py::arg("ring"));
    m.def("matrix_section", [](unsigned n, const Ring& r) { return matrix_section(n, r.ptr); }, py::arg("n"),
          py::arg("ring"));

    m.def(
        "semigroup_split_check",
        [](std::vector<std::uint64_t> gens, std::uint64_t p) {
            auto v = semigroup_split_check(NumericalSemigroup(std::move(gens)), Prime(p));
            return py::make_tuple(v.split, v.witness);
        },
        py::arg("generators"), py::arg("p"), "Returns (split, witness).");

    m.def("p1_extension_check", [](const Polynomial& coeff) {
        auto e = p1_extension_check(TwistedEndo(coeff));
        py::dict d;
        d["extends"] = e.extends;
        d["other_chart"] = e.other_chart ? py::cast(e.other_chart->to_string()) : py::none();
        d["compatible_zero"] = e.compatible_zero;
        d["compatible_infinity"] = e.compatible_infinity;
        return d;
    }, py::arg("coeff"));

    m.def("cartier_top", py::overload_cast<const Polynomial&>(&cartier_top), py::arg("g"),
          "Cartier operator on g dx_1^...^dx_n, returned as the coefficient of the volume form.");
    m.def("phi_poly", [](std::uint64_t p) { return phi_poly(Prime(p)); }, py::arg("p"));

    m.def("run_corpus", [](const std::string& text, bool certificates) {
        auto report = cli::run_corpus(cli::json::parse(text));
        return py::make_tuple(report.all_pass(), cli::to_json(report).dump(), cli::to_text(report, certificates));
    }, py::arg("document"), py::arg("certificates") = false,
       "Runs a corpus document given as JSON text. Returns (all_pass, json_report, text_report).");
}
