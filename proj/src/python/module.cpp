// Copyright 2026 The sowig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sowig/analysis.hpp"
#include "sowig/error.hpp"
#include "sowig/oracle.hpp"
#include "sowig/scenario.hpp"
#include "sowig/serialize.hpp"
#include "sowig/states.hpp"
#include "sowig/superosc.hpp"
#include "sowig/wigner.hpp"

namespace py = pybind11;
using namespace sowig;

namespace {

py::array_t<double> grid_array(const PhaseSpaceGrid &grid) {
    py::array_t<double> out({grid.spec.nx, grid.spec.np});
    std::copy(grid.values.begin(), grid.values.end(), out.mutable_data());
    return out;
}

ScenarioConfig scenario(const std::string &preset, const py::dict &overrides) {
    KvDocument doc;
    doc.set("preset", preset);
    for (const auto &[k, v] : overrides) doc.set(py::str(k), py::str(v));
    ScenarioConfig config;
    apply_kv(config, doc);
    return config;
}

}  // namespace

PYBIND11_MODULE(_sowig, m) {
    m.doc() = "Wigner functions of superoscillating cat superpositions";

    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<UndersampledError>(m, "UndersampledError", PyExc_RuntimeError);
    py::register_exception<AnalysisError>(m, "AnalysisError", PyExc_RuntimeError);

    py::class_<PhysicalConstants>(m, "PhysicalConstants")
        .def(py::init<double>(), py::arg("hbar") = 1.0)
        .def_readwrite("hbar", &PhysicalConstants::hbar)
        .def_property_readonly("h", &PhysicalConstants::h);

    py::class_<SuperoscParams>(m, "SuperoscParams")
        .def(py::init<int, double>(), py::arg("n"), py::arg("alpha"))
        .def_readwrite("n", &SuperoscParams::n)
        .def_readwrite("alpha", &SuperoscParams::alpha);

    py::class_<CoeffTable>(m, "CoeffTable")
        .def_readonly("c", &CoeffTable::c)
        .def_readonly("d", &CoeffTable::d)
        .def_readonly("k", &CoeffTable::k)
        .def_readonly("sum_c", &CoeffTable::sum_c)
        .def_readonly("sum_d", &CoeffTable::sum_d);

    m.def("fourier_coeffs", &fourier_coeffs, py::arg("params"));
    m.def("eval_f_direct", &eval_f_direct, py::arg("params"), py::arg("x"));
    m.def("eval_f_fourier", &eval_f_fourier, py::arg("table"), py::arg("params"), py::arg("x"));

    py::class_<GaussianComponent>(m, "GaussianComponent")
        .def(py::init<double, double, Complex, double>(), py::arg("center"), py::arg("xi"),
             py::arg("coeff") = Complex{1.0, 0.0}, py::arg("momentum") = 0.0)
        .def_readwrite("center", &GaussianComponent::center)
        .def_readwrite("xi", &GaussianComponent::xi)
        .def_readwrite("coeff", &GaussianComponent::coeff)
        .def_readwrite("momentum", &GaussianComponent::momentum);

    py::class_<StateSpec>(m, "StateSpec")
        .def(py::init<>())
        .def_readwrite("components", &StateSpec::components)
        .def_readwrite("constants", &StateSpec::constants)
        .def_readwrite("normalized", &StateSpec::normalized)
        .def("to_text", [](const StateSpec &s) { return state_to_text(s); })
        .def_static("from_text", [](const std::string &t) { return state_from_text(t); });

    m.def("normalize", &normalize, py::arg("state"));
    m.def("norm_squared", &norm_squared, py::arg("state"));
    m.def(
        "build_cat",
        [](double dx, double xi, double hbar, bool normalized) {
            return build_cat(dx, xi, {hbar}, normalized ? Normalization::unit : Normalization::raw);
        },
        py::arg("delta_x"), py::arg("xi"), py::arg("hbar") = 1.0, py::arg("normalized") = true);
    m.def(
        "build_psi",
        [](int n, double alpha, double dx, double xi, double hbar, bool normalized) {
            return build_psi({n, alpha}, dx, xi, {hbar}, normalized ? Normalization::unit : Normalization::raw);
        },
        py::arg("n"), py::arg("alpha"), py::arg("delta_x"), py::arg("xi"), py::arg("hbar") = 1.0,
        py::arg("normalized") = true);
    m.def(
        "build_compass", [](double lx, double lp, double xi, double hbar) { return build_compass(lx, lp, xi, {hbar}); },
        py::arg("extent_x"), py::arg("extent_p"), py::arg("xi"), py::arg("hbar") = 1.0);
    m.def("eval_psi", &eval_psi, py::arg("state"), py::arg("x"));

    m.def(
        "eval_wigner",
        [](const StateSpec &s, py::array_t<double> x, py::array_t<double> p) {
            return py::vectorize([&s](double xv, double pv) { return eval_wigner(s, xv, pv); })(x, p);
        },
        py::arg("state"), py::arg("x"), py::arg("p"), "W at broadcast (x, p)");
    m.def(
        "wigner_quadrature",
        [](const StateSpec &s, double x, double p) {
            return wigner_quadrature(s, x, p, default_wigner_quadrature(s, p)).value;
        },
        py::arg("state"), py::arg("x"), py::arg("p"));

    py::enum_<Rotation>(m, "Rotation").value("identity", Rotation::identity).value("quarter_turn", Rotation::quarter_turn);
    py::class_<MixtureTerm>(m, "MixtureTerm")
        .def(py::init<StateSpec, double, Rotation>(), py::arg("state"), py::arg("weight"),
             py::arg("rotation") = Rotation::identity)
        .def_readwrite("state", &MixtureTerm::state)
        .def_readwrite("weight", &MixtureTerm::weight)
        .def_readwrite("rotation", &MixtureTerm::rotation);
    py::class_<MixtureSpec>(m, "MixtureSpec")
        .def(py::init<std::vector<MixtureTerm>>(), py::arg("terms"))
        .def_readwrite("terms", &MixtureSpec::terms);
    m.def("as_mixture", &as_mixture, py::arg("state"));
    m.def("cross_state", &cross_state, py::arg("state"));
    m.def("eval_mixture", &eval_mixture, py::arg("mixture"), py::arg("x"), py::arg("p"));

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](double x0, double x1, double p0, double p1, std::size_t nx, std::size_t np) {
                 GridSpec g{x0, x1, p0, p1, nx, np};
                 validate(g);
                 return g;
             }),
             py::arg("x_min"), py::arg("x_max"), py::arg("p_min"), py::arg("p_max"), py::arg("nx"), py::arg("np"))
        .def_readonly("x_min", &GridSpec::x_min)
        .def_readonly("x_max", &GridSpec::x_max)
        .def_readonly("p_min", &GridSpec::p_min)
        .def_readonly("p_max", &GridSpec::p_max)
        .def_readonly("nx", &GridSpec::nx)
        .def_readonly("np", &GridSpec::np);
    m.def("integration_grid", &integration_grid, py::arg("mixture"), py::arg("margin") = 0.0);
    m.def(
        "eval_grid",
        [](const MixtureSpec &mix, const GridSpec &spec) {
            PhaseSpaceGrid g;
            {
                py::gil_scoped_release release;
                g = eval_grid(mix, spec);
            }
            return grid_array(g);
        },
        py::arg("mixture"), py::arg("grid"), "W on the grid as an (nx, np) array");

    py::class_<ScaleReport>(m, "ScaleReport")
        .def_readonly("L", &ScaleReport::L)
        .def_readonly("P", &ScaleReport::P)
        .def_readonly("a_Z", &ScaleReport::a_Z)
        .def_readonly("alpha_est", &ScaleReport::alpha_est)
        .def_readonly("a_SO_est", &ScaleReport::a_SO_est)
        .def_readonly("crossing_spacings", &ScaleReport::crossing_spacings)
        .def_readonly("overspill_lhs", &ScaleReport::overspill_lhs)
        .def_readonly("overspill_rhs", &ScaleReport::overspill_rhs)
        .def("to_text", [](const ScaleReport &r) { return report_to_text(r); });
    py::class_<OverspillResult>(m, "OverspillResult")
        .def_readonly("lhs", &OverspillResult::lhs)
        .def_readonly("rhs", &OverspillResult::rhs)
        .def_readonly("ratio", &OverspillResult::ratio)
        .def_readonly("indeterminate", &OverspillResult::indeterminate)
        .def_readonly("satisfied", &OverspillResult::satisfied);

    m.def("zurek_scale", [](double L, double P, double hbar) { return zurek_scale(L, P, {hbar}); }, py::arg("L"),
          py::arg("P"), py::arg("hbar") = 1.0);
    m.def("overspill_check", &overspill_check, py::arg("state"));

    m.def(
        "build_state", [](const std::string &preset, const py::dict &kw) { return build_state(scenario(preset, kw)); },
        py::arg("preset"), py::arg("overrides") = py::dict());
    m.def(
        "build_source", [](const std::string &preset, const py::dict &kw) { return build_source(scenario(preset, kw)); },
        py::arg("preset"), py::arg("overrides") = py::dict());
    m.def(
        "analyze",
        [](const std::string &preset, const py::dict &kw) {
            const AnalysisResult r = analyze_scenario(scenario(preset, kw));
            return py::make_tuple(r.report, r.overspill, r.notes);
        },
        py::arg("preset"), py::arg("overrides") = py::dict(), "(ScaleReport, OverspillResult or None, notes)");
    m.def(
        "validate",
        [](const std::string &preset, const py::dict &kw, std::size_t points) {
            py::dict out;
            for (const auto &g : validate_scenario(scenario(preset, kw), points).gates) {
                out[py::str(g.name)] = py::make_tuple(g.residual, g.tolerance, g.passed);
            }
            return out;
        },
        py::arg("preset"), py::arg("overrides") = py::dict(), py::arg("points") = 50,
        "gate name -> (residual, tolerance, passed)");
    m.def(
        "compare_with_compass",
        [](const std::string &preset, const py::dict &kw, double dir_x, double dir_p) {
            const SensitivityComparison c = compare_with_compass(scenario(preset, kw), dir_x, dir_p);
            return py::make_tuple(c.source_half, c.compass_half, c.ratio);
        },
        py::arg("preset"), py::arg("overrides") = py::dict(), py::arg("dir_x") = 0.0, py::arg("dir_p") = 1.0,
        "(source half-overlap shift, compass half-overlap shift, ratio)");
}
