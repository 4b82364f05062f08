#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "magmech/gaussian.hpp"
#include "magmech/spectrum.hpp"
#include "magmech/steady_state.hpp"
#include "magmech/sweep.hpp"
#include "magmech/verify.hpp"

namespace py = pybind11;
using namespace magmech;

PYBIND11_MODULE(_magmech, m) {
    m.doc() = "cavity-magnomechanics cooling toolkit";

    py::register_exception<InvalidParameterError>(m, "InvalidParameterError", PyExc_ValueError);
    py::register_exception<StabilityError>(m, "StabilityError", PyExc_RuntimeError);
    py::register_exception<SingularSpectrumError>(m, "SingularSpectrumError", PyExc_RuntimeError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    py::class_<SystemParams>(m, "SystemParams")
        .def(py::init<>())
        .def_readwrite("omega_b", &SystemParams::omega_b)
        .def_readwrite("delta_a", &SystemParams::delta_a)
        .def_readwrite("delta_m", &SystemParams::delta_m)
        .def_readwrite("gamma_a", &SystemParams::gamma_a)
        .def_readwrite("gamma_b", &SystemParams::gamma_b)
        .def_readwrite("gamma_m", &SystemParams::gamma_m)
        .def_readwrite("g", &SystemParams::g)
        .def_readwrite("G_mag", &SystemParams::G_mag)
        .def_readwrite("n_a", &SystemParams::n_a)
        .def_readwrite("n_b", &SystemParams::n_b)
        .def_readwrite("n_m", &SystemParams::n_m)
        .def("validate", &SystemParams::validate)
        .def("weak_coupling_ok", &SystemParams::weak_coupling_ok);

    py::class_<SqueezingParams>(m, "SqueezingParams")
        .def(py::init<>())
        .def(py::init([](double zeta_abs, double phi) {
                 SqueezingParams sq{zeta_abs, phi};
                 sq.validate();
                 return sq;
             }),
             py::arg("zeta_abs"), py::arg("phi") = 0.0)
        .def_readwrite("zeta_abs", &SqueezingParams::zeta_abs)
        .def_readwrite("phi", &SqueezingParams::phi)
        .def("value", &SqueezingParams::value);

    py::class_<CoolingReport>(m, "CoolingReport")
        .def_readonly("a_plus", &CoolingReport::a_plus)
        .def_readonly("a_minus", &CoolingReport::a_minus)
        .def_readonly("gamma_net", &CoolingReport::gamma_net)
        .def_readonly("n_st", &CoolingReport::n_st)
        .def_readonly("weak_coupling_ok", &CoolingReport::weak_coupling_ok);

    m.def("magnon_spectrum", &magnon_spectrum, py::arg("omega"), py::arg("params"),
          py::arg("squeezing") = SqueezingParams{});
    m.def("numeric_spectrum", &numeric_spectrum, py::arg("omega"), py::arg("params"),
          py::arg("zeta") = cplx(0.0, 0.0));
    m.def("scattering_rates", &scattering_rates, py::arg("params"), py::arg("squeezing"));
    m.def("steady_phonon_number", &steady_phonon_number, py::arg("params"),
          py::arg("squeezing") = SqueezingParams{});
    m.def("optimal_squeezing", &optimal_squeezing, py::arg("params"));
    m.def("thermal_occupancy", &thermal_occupancy, py::arg("omega"), py::arg("temperature"));
    m.def(
        "stationary_phonon",
        [](const SystemParams& p, cplx g_eff, cplx zeta) {
            return stationary_phonon(p, g_eff, zeta);
        },
        py::arg("params"), py::arg("g_eff"), py::arg("zeta") = cplx(0.0, 0.0));
    m.def(
        "optimize_squeezing",
        [](const SystemParams& p) {
            const OptimizeResult r = optimize_squeezing_numeric(p);
            return py::make_tuple(r.sq, r.n_st_min, r.degenerate);
        },
        py::arg("params"), "returns (squeezing, n_st_min, degenerate)");
    m.def(
        "run_acceptance",
        [](bool quick) {
            py::list out;
            VerifyOptions opts;
            opts.quick = quick;
            for (const auto& r : run_acceptance(opts)) {
                py::dict d;
                d["id"] = r.id;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("quick") = true);
}
