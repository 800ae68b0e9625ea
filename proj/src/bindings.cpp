#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "strata/cli.hpp"
#include "strata/constructions.hpp"
#include "strata/horns.hpp"
#include "strata/invariants.hpp"
#include "strata/io.hpp"
#include "strata/subdivision.hpp"

namespace py = pybind11;
using namespace strata;

namespace {

struct PyComplex {
    ComplexPtr c;
    std::vector<std::string> poset() const { return c->poset().names(); }
    std::vector<int> counts() const { return c->counts(); }
    long euler() const { return c->euler_characteristic(); }
    int dim() const { return c->dim(); }
    std::string emit() const { return emit_complex(c); }
};

PyComplex load(const std::string& ref) { return {cli::load_reference(ref).doc.complex}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "filtered simplicial sets over finite posets";
    py::register_exception<Error>(m, "StrataError", PyExc_ValueError);

    py::class_<PyComplex>(m, "Complex")
        .def_property_readonly("poset", &PyComplex::poset)
        .def_property_readonly("counts", &PyComplex::counts)
        .def_property_readonly("euler_characteristic", &PyComplex::euler)
        .def_property_readonly("dim", &PyComplex::dim)
        .def("emit", &PyComplex::emit)
        .def("__repr__", [](const PyComplex& x) {
            std::ostringstream s;
            s << "<Complex counts=";
            for (size_t i = 0; i < x.counts().size(); ++i) s << (i ? "/" : "") << x.counts()[i];
            s << ">";
            return s.str();
        });

    m.def("parse", [](const std::string& text) { return PyComplex{parse_complex(text)}; }, py::arg("text"));
    m.def("load", &load, py::arg("reference"), "examples:NAME, fixtures:NAME or a path");
    m.def("example_names", &example_names);
    m.def("is_admissible", py::overload_cast<const ColorWord&, int>(&is_admissible), py::arg("word"), py::arg("k"));
    m.def(
        "subdivide",
        [](const PyComplex& x, int iterations) {
            ComplexPtr c = x.c;
            for (int i = 0; i < iterations; ++i) c = subdivide(c)->complex;
            return PyComplex{c};
        },
        py::arg("complex"), py::arg("iterations") = 1);
    m.def(
        "check_fibrant",
        [](const PyComplex& x, int dim_bound) { return verdict_name(check_fibrant(x.c, dim_bound).verdict); },
        py::arg("complex"), py::arg("dim_bound") = 3);
    m.def(
        "spi0_classes",
        [](const PyComplex& x, int stage) {
            py::dict out;
            auto d = spi0(x.c, stage);
            for (auto& v : d.values) out[py::str(format_word(d.poset, v.word))] = v.classes;
            return out;
        },
        py::arg("complex"), py::arg("stage") = 2);
    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = cli::run(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "runs the command line tool; returns (exit code, stdout, stderr)");
}
