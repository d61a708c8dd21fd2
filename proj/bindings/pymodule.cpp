#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "filtcoh/catalog.hpp"
#include "filtcoh/invariants.hpp"
#include "filtcoh/modelfile.hpp"
#include "filtcoh/spectral.hpp"

namespace py = pybind11;
using namespace filtcoh;

namespace {

// Python-side handle; GradedModel itself is immutable and shared.
struct PyModel {
    ModelPtr ptr;
};

py::dict table_dict(const CohomologyTable& t)
{
    py::dict d;
    d["model"] = t.model_name;
    d["p"] = t.p;
    d["top_degree"] = t.top_degree;
    d["betti"] = t.b;
    d["lefschetz_ranks"] = t.r;
    d["filtered_betti_formula"] = t.b_phi_formula;
    d["filtered_betti"] = t.b_phi_direct;
    d["even_sum"] = t.even_sum;
    d["ell"] = t.ell ? py::cast(*t.ell) : py::none();
    d["k"] = t.k_char ? py::cast(*t.k_char) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_filtcoh, m)
{
    m.doc() = "Exact filtered cohomology computations on finite cdga models";

    py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::class_<PyModel>(m, "Model")
        .def_property_readonly("name", [](const PyModel& s) { return s.ptr->name(); })
        .def_property_readonly("dim", [](const PyModel& s) { return s.ptr->dim(); })
        .def_property_readonly("top_degree", [](const PyModel& s) { return s.ptr->top_degree(); })
        .def("__repr__", [](const PyModel& s) {
            return "<Model " + s.ptr->name() + ", dim " + std::to_string(s.ptr->dim()) + ">";
        });

    m.def("catalog_names", &catalog::names);
    m.def("load", [](const std::string& ref) { return PyModel{resolve_model(ref)}; },
          py::arg("ref"),
          "Load a model from '@name' (catalog) or a JSON model file path.");
    m.def("product", [](const std::vector<PyModel>& factors) {
        std::vector<ModelPtr> ptrs;
        for (const auto& f : factors) ptrs.push_back(f.ptr);
        return PyModel{catalog::product(ptrs)};
    }, py::arg("factors"), "Graded tensor product of models, left to right.");

    m.def("validate", [](const PyModel& s) {
        ValidationReport r = validate(*s.ptr);
        py::list failures;
        for (const auto& f : r.failures) failures.append(py::make_tuple(f.check, f.witness));
        return failures;
    }, py::arg("model"), "List of (check, witness) validation failures; empty means valid.");

    m.def("betti", [](const PyModel& s) { return betti(*s.ptr); }, py::arg("model"));
    m.def("lefschetz_ranks", [](const PyModel& s, int q) { return lefschetz_ranks(*s.ptr, q); },
          py::arg("model"), py::arg("q") = 2);

    m.def("cohomology_table",
          [](const PyModel& s, int p) { return table_dict(cohomology_table(s.ptr, p)); },
          py::arg("model"), py::arg("p") = 1);

    m.def("semicharacteristics", [](const PyModel& s) {
        Semicharacteristics sc = semicharacteristics(s.ptr);
        py::dict d;
        d["ell"] = sc.ell ? py::cast(*sc.ell) : py::none();
        d["k"] = sc.k_char ? py::cast(*sc.k_char) : py::none();
        return d;
    }, py::arg("model"));

    m.def("verify_vanishing", [](const PyModel& s) {
        VerificationReport r = verify_vanishing(s.ptr);
        py::dict d;
        d["table"] = table_dict(r.table);
        d["applicable"] = r.applicable;
        d["paths_agree"] = r.paths_agree;
        d["pass"] = r.pass;
        d["findings"] = r.findings;
        return d;
    }, py::arg("model"));

    m.def("spectral_ops", [](const PyModel& s) {
        OperatorBundle b = build_bundle(build_cone(s.ptr, 1));
        HodgeEvenResult h = hodge_even_kernel_dim(b);
        py::dict d;
        d["hodge_even_kernel_dim"] = h.kernel_dim;
        d["even_betti_sum"] = h.even_betti_sum;
        d["D_size"] = b.d_op.rows();
        d["D_rank"] = D_rank(b);
        d["D_kernel_dim"] = D_kernel_dim(b);
        d["D_kernel_parity"] = D_kernel_parity(b);
        d["laplacian_kernel_dims"] = laplacian_kernel_dims(b.cone);
        return d;
    }, py::arg("model"), "Adjoint/Hodge/skew-operator numbers at p = 1.");

    m.def("fingerprint", [](const PyModel& s) { return model_fingerprint(*s.ptr); },
          py::arg("model"));
}
