#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "growfrag/cli.hpp"
#include "growfrag/closed_form.hpp"
#include "growfrag/errors.hpp"
#include "growfrag/mellin.hpp"
#include "growfrag/model.hpp"
#include "growfrag/pde.hpp"

namespace py = pybind11;
using namespace growfrag;

PYBIND11_MODULE(_growfrag, m) {
    m.doc() = "Explicit blow-up solution of a growth-fragmentation equation: "
              "closed forms, Mellin analysis and finite-volume verification";

    py::register_exception<PoleError>(m, "PoleError");
    py::register_exception<NonConvergenceError>(m, "NonConvergenceError");
    py::register_exception<DegenerateConnectionError>(m, "DegenerateConnectionError");
    py::register_exception<InvalidParam>(m, "InvalidParam");
    py::register_exception<InvalidDomain>(m, "InvalidDomain");
    py::register_exception<TimeOutOfRange>(m, "TimeOutOfRange");
    py::register_exception<QuadratureFailure>(m, "QuadratureFailure");
    py::register_exception<ContourTooShort>(m, "ContourTooShort");
    py::register_exception<CFLViolation>(m, "CFLViolation");
    py::register_exception<DomainTooSmall>(m, "DomainTooSmall");

    py::class_<ProblemParams>(m, "ProblemParams")
        .def_readonly("gamma", &ProblemParams::gamma)
        .def_readonly("theta", &ProblemParams::theta)
        .def_readonly("sigma1", &ProblemParams::sigma1)
        .def_readonly("sigma2", &ProblemParams::sigma2)
        .def("__repr__", [](const ProblemParams& p) {
            return "ProblemParams(gamma=" + std::to_string(p.gamma) +
                   ", theta=" + std::to_string(p.theta) + ")";
        });

    py::class_<AtomComponent>(m, "AtomComponent")
        .def_readonly("location", &AtomComponent::location)
        .def_readonly("mass", &AtomComponent::mass);

    py::enum_<GridSpacing>(m, "GridSpacing")
        .value("LOG_UNIFORM", GridSpacing::kLogUniform)
        .value("UNIFORM", GridSpacing::kUniform);

    py::class_<RadialGrid>(m, "RadialGrid")
        .def_static("log_uniform", &RadialGrid::log_uniform, py::arg("x_min"),
                    py::arg("x_max"), py::arg("cells"))
        .def_static("uniform", &RadialGrid::uniform, py::arg("x_min"), py::arg("x_max"),
                    py::arg("cells"))
        .def_readonly("edges", &RadialGrid::edges)
        .def_readonly("centers", &RadialGrid::centers)
        .def_readonly("spacing", &RadialGrid::spacing);

    py::class_<GridFunction>(m, "GridFunction")
        .def_readonly("grid", &GridFunction::grid)
        .def_readonly("values", &GridFunction::values);

    py::class_<SolutionSnapshot>(m, "SolutionSnapshot")
        .def_readonly("params", &SolutionSnapshot::params)
        .def_readonly("t", &SolutionSnapshot::t)
        .def_readonly("atom", &SolutionSnapshot::atom)
        .def_readonly("regular", &SolutionSnapshot::regular);

    py::class_<ContourSpec>(m, "ContourSpec")
        .def(py::init([](double s0, double height, int nodes) {
                 ContourSpec c{s0, height, nodes};
                 validate(c);
                 return c;
             }),
             py::arg("s0"), py::arg("height"), py::arg("nodes"))
        .def_readonly("s0", &ContourSpec::s0)
        .def_readonly("height", &ContourSpec::height)
        .def_readonly("nodes", &ContourSpec::nodes);

    py::class_<CumulantInfimum>(m, "CumulantInfimum")
        .def_readonly("value", &CumulantInfimum::value)
        .def_readonly("minimizer", &CumulantInfimum::minimizer)
        .def_readonly("existence_condition_holds",
                      &CumulantInfimum::existence_condition_holds);

    py::class_<BumpTestFunction>(m, "BumpTestFunction")
        .def(py::init([](double tc, double th, double xc, double xh) {
                 return BumpTestFunction{tc, th, xc, xh};
             }),
             py::arg("t_center"), py::arg("t_halfwidth"), py::arg("x_center"),
             py::arg("x_halfwidth"))
        .def("time_value", &BumpTestFunction::time_value)
        .def("space_value", &BumpTestFunction::space_value);

    // special functions
    m.def("log_gamma", &specfun::log_gamma, py::arg("z"));
    m.def("gamma", &specfun::gamma, py::arg("z"));
    m.def("digamma", &specfun::digamma, py::arg("z"));
    m.def("hyp2f1", &specfun::hyp2f1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));

    // model
    m.def("make_params", &make_params, py::arg("gamma"), py::arg("theta"));
    m.def("kernel", &kernel, py::arg("params"), py::arg("x"));
    m.def("kernel_second_moment", &kernel_second_moment, py::arg("params"));
    m.def("kernel_mellin", &kernel_mellin, py::arg("params"), py::arg("s"));
    m.def("cumulant", &cumulant, py::arg("params"), py::arg("s"));
    m.def("cumulant_factored", &cumulant_factored, py::arg("params"), py::arg("s"));
    m.def("cumulant_infimum", &cumulant_infimum, py::arg("params"));
    m.def("cumulant_infimum_positive", &cumulant_infimum_positive, py::arg("params"));

    // closed forms
    m.def("blowup_time", &blowup_time, py::arg("params"));
    m.def("front_position", &front_position, py::arg("params"), py::arg("t"));
    m.def("atom_state", &atom_state, py::arg("params"), py::arg("t"));
    m.def("regular_density", &regular_density, py::arg("params"), py::arg("t"), py::arg("x"));
    m.def("solution_mellin", &solution_mellin, py::arg("params"), py::arg("t"), py::arg("s"));
    m.def("solution_mellin_euler", &solution_mellin_euler, py::arg("params"), py::arg("t"),
          py::arg("s"));
    m.def("atom_mellin", &atom_mellin, py::arg("params"), py::arg("t"), py::arg("s"));
    m.def("moment", &moment, py::arg("params"), py::arg("t"), py::arg("r"));
    m.def("complex_moment", &complex_moment, py::arg("params"), py::arg("t"), py::arg("r"));
    m.def("blowup_constant", &blowup_constant, py::arg("params"), py::arg("r"));
    m.def("scaled_moment", &scaled_moment, py::arg("params"), py::arg("t"), py::arg("r"));
    m.def("limit_profile", &limit_profile, py::arg("params"), py::arg("x"));
    m.def("make_snapshot", &make_snapshot, py::arg("params"), py::arg("t"), py::arg("grid"));

    // Mellin analysis
    m.def("snapshot_mellin", &snapshot_mellin, py::arg("snapshot"), py::arg("s"));
    m.def("inverse_mellin_regular", &inverse_mellin_regular, py::arg("params"), py::arg("t"),
          py::arg("x"), py::arg("contour"), py::arg("tol") = 1e-4);
    m.def("evolution_residual", &evolution_residual, py::arg("params"), py::arg("t"),
          py::arg("s"), py::arg("dt"));
    m.def("beta_moment_integral", &beta_moment_integral, py::arg("params"), py::arg("t"),
          py::arg("n"), py::arg("s"));
    m.def("beta_moment_quadrature", &beta_moment_quadrature, py::arg("params"), py::arg("t"),
          py::arg("n"), py::arg("s"), py::arg("rel_tol") = 1e-11);
    m.def("normalized_profile_mellin", &normalized_profile_mellin, py::arg("params"),
          py::arg("t"), py::arg("s"));

    // finite-volume verification
    m.def("fragmentation_gain", &fragmentation_gain, py::arg("params"), py::arg("f"),
          py::arg("x"));
    m.def("solve_regular", &solve_regular, py::arg("params"), py::arg("t0"), py::arg("t1"),
          py::arg("grid"), py::arg("cfl"),
          py::call_guard<py::gil_scoped_release>());
    m.def("integrate_atom_ode", &integrate_atom_ode, py::arg("params"), py::arg("t1"),
          py::arg("dt") = 0.0);
    m.def("weak_residual", &weak_residual, py::arg("params"), py::arg("phi"),
          py::arg("nodes_per_axis"), py::call_guard<py::gil_scoped_release>());

    // CLI entry point, usable as growfrag.cli_run([...])
    m.def("cli_run", &cli::run, py::arg("args"));
}
