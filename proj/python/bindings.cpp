// Copyright 2026 The corr-radiance Authors
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

#include "corr_radiance/correlations.hpp"
#include "corr_radiance/emission.hpp"
#include "corr_radiance/figures.hpp"
#include "corr_radiance/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace corr_radiance;

namespace {

// Density matrices cross the boundary as complex numpy arrays and are
// validated on the way in.
DensityMatrix to_state(const CMatrix &m) { return DensityMatrix(m); }

Subsystem to_subsystem(int index) {
    if (index != 1 && index != 2) throw std::invalid_argument("subsystem index must be 1 or 2");
    return static_cast<Subsystem>(index);
}

std::string render(const Table &table, const std::string &format) {
    std::ostringstream os;
    if (format == "csv") {
        write_csv(table, os);
    } else if (format == "json") {
        write_json(table, os);
    } else {
        throw std::invalid_argument("format must be 'csv' or 'json'");
    }
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Discord-induced superradiance and photon statistics of two separated atoms.";

    // qstate
    m.def("make_x_state", [](double cx, double cy, double cz) {
        return make_x_state({cx, cy, cz}).matrix();
    }, "cx"_a, "cy"_a, "cz"_a);
    m.def("make_werner", [](double c) { return make_werner(WernerParam(c)).matrix(); }, "c"_a);
    m.def("validate_density", [](const CMatrix &mat) {
        const auto r = validate_density(mat);
        return py::dict("trace_deviation"_a = r.trace_deviation,
                        "hermiticity_deviation"_a = r.hermiticity_deviation,
                        "min_eigenvalue"_a = r.min_eigenvalue, "passed"_a = r.passed);
    }, "matrix"_a);
    m.def("partial_trace", [](const CMatrix &rho, int keep) {
        return partial_trace(to_state(rho), to_subsystem(keep)).matrix();
    }, "rho"_a, "keep"_a);
    m.def("von_neumann_entropy", [](const CMatrix &rho) {
        return von_neumann_entropy(to_state(rho));
    }, "rho"_a);
    m.def("sigma_minus", &sigma_minus, "atom"_a);
    m.def("excitation_probability", [](const CMatrix &rho) {
        return excitation_probability(to_state(rho));
    }, "rho"_a);

    // correlations
    m.def("discord_werner_closed", &discord_werner_closed, "c"_a);
    m.def("discord_numeric", [](const CMatrix &rho, int measured, int grid, double tol) {
        DiscordOptions opts;
        opts.measured = to_subsystem(measured);
        opts.grid = grid;
        opts.tol = tol;
        const auto r = discord_numeric(to_state(rho), opts);
        return py::dict("value"_a = r.value, "theta"_a = r.theta, "phi"_a = r.phi,
                        "iterations"_a = r.iterations, "converged"_a = r.converged);
    }, "rho"_a, "measured"_a = 2, "grid"_a = 64, "tol"_a = 1e-8);
    m.def("concurrence_closed", &concurrence_closed, "c"_a);
    m.def("concurrence_wootters", [](const CMatrix &rho) {
        return concurrence_wootters(to_state(rho));
    }, "rho"_a);
    m.def("discord_to_c", &discord_to_c, "discord"_a, "tol"_a = 1e-9);
    m.def("classify_correlations", [](double c) {
        return std::string(to_string(classify_correlations(c)));
    }, "c"_a);

    // emission
    py::class_<DetectionGeometry>(m, "DetectionGeometry")
        .def(py::init<double, double>(), "kl"_a, "beta"_a)
        .def_static("from_sin_beta", &DetectionGeometry::from_sin_beta, "kl"_a, "sin_beta"_a)
        .def_property_readonly("kl", &DetectionGeometry::kl)
        .def_property_readonly("sin_beta", &DetectionGeometry::sin_beta)
        .def_property_readonly("beta", &DetectionGeometry::beta)
        .def_property_readonly("phase", &DetectionGeometry::phase);

    py::enum_<PhaseConvention>(m, "PhaseConvention")
        .value("INDEXED", PhaseConvention::Indexed)
        .value("CENTERED", PhaseConvention::Centered);

    m.def("field_operator", &field_operator, "geometry"_a,
          "convention"_a = PhaseConvention::Indexed);
    m.def("intensity_oracle", [](const CMatrix &rho, const DetectionGeometry &g,
                                 PhaseConvention conv) {
        return intensity_oracle(to_state(rho), g, conv);
    }, "rho"_a, "geometry"_a, "convention"_a = PhaseConvention::Indexed);
    m.def("g2_oracle", [](const CMatrix &rho, const DetectionGeometry &g, PhaseConvention conv) {
        return g2_oracle(to_state(rho), g, conv);
    }, "rho"_a, "geometry"_a, "convention"_a = PhaseConvention::Indexed);
    m.def("intensity_closed_x", [](double cx, double cy, double cz, const DetectionGeometry &g) {
        return intensity_closed_x({cx, cy, cz}, g);
    }, "cx"_a, "cy"_a, "cz"_a, "geometry"_a);
    m.def("intensity_closed_werner", &intensity_closed_werner, "c"_a, "geometry"_a);
    m.def("g2_closed_werner", &g2_closed_werner, "c"_a, "geometry"_a);
    m.def("classify", [](double intensity, std::optional<double> g2) {
        const auto r = classify(intensity, g2);
        return py::dict("intensity"_a = r.intensity, "g2"_a = r.g2,
                        "radiance"_a = std::string(to_string(r.radiance)),
                        "statistics"_a = std::string(to_string(r.statistics)));
    }, "intensity"_a, "g2"_a);
    m.def("radiance_boundary", &radiance_boundary, "kl"_a);
    m.def("find_statistics_transition", [](const DetectionGeometry &g) -> py::object {
        const auto t = find_statistics_transition(g);
        if (!t) return py::none();
        return py::dict("c_star"_a = t->c_star, "c_bisected"_a = t->c_bisected,
                        "discord"_a = t->discord);
    }, "geometry"_a);

    // cli-level tables
    m.def("figure_table", [](const std::string &command, double kl, int grid_d, int grid_b,
                             double sin_beta, const std::string &format) {
        const FigureConfig cfg{kl, grid_d, grid_b, sin_beta};
        if (command == "fig2") return render(fig2_table(cfg), format);
        if (command == "fig3") return render(fig3_table(cfg), format);
        if (command == "fig4") return render(fig4_table(cfg), format);
        if (command == "fig5") return render(fig5_table(cfg), format);
        if (command == "transition") return render(transition_table(cfg), format);
        throw std::invalid_argument("unknown figure command: " + command);
    }, "command"_a, "kl"_a = kDefaultKl, "grid_d"_a = 101, "grid_b"_a = 101,
       "sin_beta"_a = 0.2, "format"_a = "csv");
    m.def("run_verification", [](int grid_d, int grid_b, std::optional<double> override_tol) {
        VerifyOptions opts;
        opts.figure.grid_d = grid_d;
        opts.figure.grid_b = grid_b;
        opts.tolerance_override = override_tol;
        py::list out;
        for (const auto &r : run_verification(opts)) {
            out.append(py::dict("name"_a = r.name, "samples"_a = r.samples,
                                "max_deviation"_a = r.max_deviation, "tolerance"_a = r.tolerance,
                                "strict"_a = r.strict, "passed"_a = r.passed));
        }
        return out;
    }, "grid_d"_a = 101, "grid_b"_a = 101, "tolerance_override"_a = py::none());
}
