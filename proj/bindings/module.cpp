// Python bindings: thin wrappers over the C++ core. Structured results are
// returned as JSON strings (parse with json.loads) so the Python surface
// stays schema-identical to the CLI.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "simplectra/bounds.hpp"
#include "simplectra/checkall.hpp"
#include "simplectra/combinatorics.hpp"
#include "simplectra/complex.hpp"
#include "simplectra/errors.hpp"
#include "simplectra/generators.hpp"
#include "simplectra/hodge.hpp"
#include "simplectra/io.hpp"
#include "simplectra/satake.hpp"

namespace py = pybind11;
using namespace simplectra;

PYBIND11_MODULE(simplectra, m) {
    m.doc() = "Hodge spectra, expansion bounds, and gallery counting for simplicial complexes";
    m.attr("__version__") = shell::kToolVersion;

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<not_applicable_error>(m, "NotApplicableError", PyExc_RuntimeError);
    py::register_exception<resource_cap_error>(m, "ResourceCapError", PyExc_RuntimeError);
    py::register_exception<numeric_error>(m, "NumericError", PyExc_RuntimeError);

    py::class_<SimplicialComplex>(m, "Complex")
        .def_static("from_maximal_faces", &SimplicialComplex::from_maximal_faces, py::arg("faces"),
                    py::arg("n"))
        .def_property_readonly("n", &SimplicialComplex::n)
        .def_property_readonly("dim", &SimplicialComplex::dim)
        .def("cells", &SimplicialComplex::cells, py::arg("i"))
        .def("cell_count", &SimplicialComplex::cell_count, py::arg("i"))
        .def("euler_characteristic", &SimplicialComplex::euler_characteristic)
        .def("has_cell", &SimplicialComplex::has_cell, py::arg("cell"))
        .def("to_text", [](const SimplicialComplex& X) { return serialize_complex_text(X); })
        .def("__repr__", [](const SimplicialComplex& X) {
            return "<Complex n=" + std::to_string(X.n()) + " dim=" + std::to_string(X.dim()) + ">";
        });

    m.def("generate", &gen::generate, py::arg("spec"), py::arg("seed") = 0);
    m.def("parse_text", &parse_complex_text, py::arg("text"));
    m.def(
        "maximal_faces", [](const SimplicialComplex& X) { return maximal_faces(X); },
        py::arg("complex"));

    m.def(
        "spectrum_report",
        [](const SimplicialComplex& X, int i) { return hodge::spectrum_report(X, i).to_json().dump(); },
        py::arg("complex"), py::arg("i"));
    m.def("betti_number", &hodge::betti_number, py::arg("complex"), py::arg("i"));
    m.def(
        "garland_check",
        [](const SimplicialComplex& X, int j) { return hodge::garland_check(X, j).to_json().dump(); },
        py::arg("complex"), py::arg("j"));
    m.def(
        "deviation_norms",
        [](const SimplicialComplex& X) { return hodge::deviation_norms(X).to_json().dump(); },
        py::arg("complex"));

    m.def("count_rainbow", &comb::count_rainbow, py::arg("complex"), py::arg("j"), py::arg("sets"));
    m.def("count_paths", &comb::count_paths, py::arg("complex"), py::arg("S"), py::arg("T"),
          py::arg("R"));
    m.def("count_galleries", &comb::count_galleries, py::arg("complex"), py::arg("j"),
          py::arg("sets"));
    m.def("spectral_gallery_count", &comb::spectral_gallery_count, py::arg("complex"),
          py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"));

    m.def(
        "cheeger_check",
        [](const SimplicialComplex& X, const std::vector<int>& A, const std::vector<int>& B,
           const std::vector<int>& C) { return bounds::cheeger_check(X, A, B, C).to_json().dump(); },
        py::arg("complex"), py::arg("A"), py::arg("B"), py::arg("C"));
    m.def(
        "h_theta",
        [](const SimplicialComplex& X, double theta) { return bounds::h_theta(X, theta).to_json().dump(); },
        py::arg("complex"), py::arg("theta"));
    m.def(
        "mixing_check",
        [](const SimplicialComplex& X, const std::vector<int>& A, const std::vector<int>& B,
           const std::vector<int>& C, const std::vector<int>& D) {
            return bounds::mixing_check(X, A, B, C, D).to_json().dump();
        },
        py::arg("complex"), py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"));
    m.def(
        "colored_mixing_check",
        [](const SimplicialComplex& X, const std::vector<int>& coloring, const std::vector<int>& A,
           const std::vector<int>& B) {
            return bounds::colored_mixing_check(X, coloring, A, B).to_json().dump();
        },
        py::arg("complex"), py::arg("coloring"), py::arg("A"), py::arg("B"));
    m.def(
        "weak_chromatic",
        [](const SimplicialComplex& X) {
            const auto r = bounds::weak_chromatic(X);
            return py::make_tuple(r.chi, r.witness);
        },
        py::arg("complex"));
    m.def(
        "find_proper_coloring",
        [](const SimplicialComplex& X, int c) -> py::object {
            const auto col = find_proper_coloring(X, c);
            if (!col) return py::none();
            return py::cast(col->colors);
        },
        py::arg("complex"), py::arg("c"));

    m.def(
        "satake_report",
        [](std::complex<double> z1, std::complex<double> z2, std::complex<double> z3, int q) {
            const auto p = satake::make_params(z1, z2, z3, q);
            const auto info = satake::classify_type(p);
            const auto cf = satake::closed_form_eigenvalues(p);
            nlohmann::ordered_json j;
            j["type"] = info.name;
            j["lambdaK"] = {cf.lamK.real(), cf.lamK.imag()};
            j["lambdaE_plus"] = {cf.lamE_plus.real(), cf.lamE_plus.imag()};
            j["lambdaE_minus"] = {cf.lamE_minus.real(), cf.lamE_minus.imag()};
            j["nonreal"] = cf.nonreal;
            j["chain_residual"] = satake::chain_residual(p);
            j["composite_residual"] = satake::composite_residual(p);
            j["eigenvalue_deviation"] = satake::closed_form_deviation(p);
            return j.dump();
        },
        py::arg("z1"), py::arg("z2"), py::arg("z3"), py::arg("q"));
    m.def(
        "predicted_spectrum",
        [](long long n, int q, bool tripartite, long long euler) {
            return satake::predicted_spectrum(n, q, tripartite, euler).to_json().dump();
        },
        py::arg("n"), py::arg("q"), py::arg("tripartite"), py::arg("euler"));
    m.def(
        "ramanujan_formulas",
        [](int q, double theta, std::optional<long long> n, const std::vector<long long>& sizes) {
            return satake::ramanujan_formulas(q, theta, n, sizes).dump();
        },
        py::arg("q"), py::arg("theta"), py::arg("n") = std::nullopt,
        py::arg("sizes") = std::vector<long long>{});

    m.def(
        "run_check_all",
        [](const std::string& corpus, std::uint64_t seed) {
            return shell::run_check_all(corpus, seed).document.dump();
        },
        py::arg("corpus") = "default", py::arg("seed") = 0);
}
