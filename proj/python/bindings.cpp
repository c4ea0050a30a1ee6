#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhopf/analysis.hpp"
#include "qhopf/braided.hpp"
#include "qhopf/catalog.hpp"
#include "qhopf/error.hpp"
#include "qhopf/io.hpp"
#include "qhopf/validate.hpp"

namespace py = pybind11;
using namespace qhopf;

namespace {

// Forms and elements cross the boundary as {index: "exact scalar"}.
py::dict sparse(const Vec& v) {
    py::dict d;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) d[py::int_(i)] = v[i].to_string();
    return d;
}

struct Algebra {
    explicit Algebra(Presentation p) : an(std::move(p)) {}
    Analysis an;

    py::dict form(const Vec& f) {
        py::dict d;
        d["text"] = render_form(an.alg(), f);
        d["terms"] = sparse(f);
        return d;
    }
};

}  // namespace

PYBIND11_MODULE(_qhopf, m) {
    // Leaked on purpose: the type lives as long as the interpreter.
    static PyObject* error = PyErr_NewException("qhopf.QhopfError", PyExc_RuntimeError, nullptr);
    m.attr("QhopfError") = py::handle(error);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::reinterpret_borrow<py::object>(error)(e.what());
            inst.attr("kind") = to_string(e.kind());
            inst.attr("input_error") = e.is_input_error();
            PyErr_SetObject(error, inst.ptr());
        }
    });

    m.def("catalog_names", [] {
        std::vector<std::string> out;
        for (const auto& e : catalog_entries()) out.push_back(e.name);
        return out;
    });

    py::class_<Algebra>(m, "Algebra")
        .def_static("catalog", [](const std::string& name, const std::vector<int>& params) {
            return Algebra(make_catalog(name, params));
        }, py::arg("name"), py::arg("params") = std::vector<int>{})
        .def_static("from_json", [](const std::string& text) { return Algebra(presentation_from_json(text)); })
        .def_static("load", [](const std::string& path) { return Algebra(load_presentation(path)); })
        .def_property_readonly("name", [](const Algebra& a) { return a.an.alg().presentation().name; })
        .def_property_readonly("dim", [](const Algebra& a) { return a.an.alg().dim(); })
        .def_property_readonly("basis", [](const Algebra& a) { return a.an.alg().presentation().basis; })
        .def("to_json", [](const Algebra& a) { return presentation_to_json(a.an.alg().presentation()); })
        .def("validate", [](const Algebra& a, bool strict_r) {
            py::list out;
            for (const auto& c : validate(a.an.alg(), {strict_r}).checks)
                out.append(py::make_tuple(c.name, c.pass, c.witness));
            return out;
        }, py::arg("strict_r") = false)
        .def("integrals", [](Algebra& a) {
            const auto& in = a.an.integrals();
            py::dict d;
            d["left"] = sparse(in.left_integral);
            d["right"] = sparse(in.right_integral);
            d["modulus"] = sparse(in.modulus);
            d["unimodular"] = in.unimodular;
            return d;
        })
        .def("cointegral", [](Algebra& a, const std::string& kind) {
            return a.form(a.an.cointegral(parse_cointegral_kind(kind)).form);
        }, py::arg("kind"))
        .def("monadic", [](Algebra& a, int i) { return a.form(a.an.monadic(i).form); }, py::arg("i"))
        .def("verify_theorem", [](Algebra& a) {
            const auto rep = verify_main_theorem(a.an);
            py::list rows;
            for (const auto& r : rep.rows) {
                py::dict d;
                d["monad"] = r.monad;
                d["source"] = to_string(r.source);
                d["applicable"] = r.applicable;
                d["pass"] = r.pass;
                d["ratio"] = r.ratio ? py::object(py::str(r.ratio->to_string())) : py::object(py::none());
                rows.append(d);
            }
            py::dict d;
            d["rows"] = rows;
            d["square"] = rep.square.pass;
            d["ok"] = rep.ok();
            return d;
        });
}
