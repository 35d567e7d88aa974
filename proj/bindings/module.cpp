#include "nsplab/acceptance.hpp"
#include "nsplab/functionals.hpp"
#include "nsplab/poisson.hpp"
#include "nsplab/rarefaction.hpp"
#include "nsplab/shock_profile.hpp"
#include "nsplab/thermo.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace nsplab;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Composite waves of the 1D isothermal Navier-Stokes-Poisson system";

    py::class_<thermo::RiemannFan>(m, "RiemannFan")
        .def_readonly("v_minus", &thermo::RiemannFan::v_minus)
        .def_readonly("u_minus", &thermo::RiemannFan::u_minus)
        .def_readonly("v_mid", &thermo::RiemannFan::v_mid)
        .def_readonly("u_mid", &thermo::RiemannFan::u_mid)
        .def_readonly("v_plus", &thermo::RiemannFan::v_plus)
        .def_readonly("u_plus", &thermo::RiemannFan::u_plus)
        .def_readonly("sigma", &thermo::RiemannFan::sigma)
        .def_readonly("delta_R", &thermo::RiemannFan::delta_R)
        .def_readonly("delta_S", &thermo::RiemannFan::delta_S)
        .def_readonly("phi_mid", &thermo::RiemannFan::phi_mid);

    m.def("solve_riemann", &thermo::solve_riemann, py::arg("v_minus"),
          py::arg("u_minus"), py::arg("v_plus"), py::arg("u_plus"),
          py::arg("tol") = 1e-12);
    m.def("modified_pressure", &thermo::modified_pressure, py::arg("v"));
    m.def("lambda1", &thermo::lambda1, py::arg("v"));
    m.def("lambda2", &thermo::lambda2, py::arg("v"));
    m.def("r1_velocity", &thermo::r1_velocity);
    m.def("s2_velocity", &thermo::s2_velocity);
    m.def("shock_speed", &thermo::shock_speed, py::arg("v_mid"), py::arg("u_mid"),
          py::arg("v_plus"), py::arg("u_plus"), py::arg("tol") = 1e-9);

    py::class_<shock_profile::ShockProfile>(m, "ShockProfile")
        .def_readonly("sigma", &shock_profile::ShockProfile::sigma)
        .def_readonly("delta_S", &shock_profile::ShockProfile::delta_S)
        .def_readonly("L", &shock_profile::ShockProfile::L)
        .def_readonly("dxi", &shock_profile::ShockProfile::dxi)
        .def_readonly("xi", &shock_profile::ShockProfile::xi)
        .def_readonly("v", &shock_profile::ShockProfile::v)
        .def_readonly("u", &shock_profile::ShockProfile::u)
        .def_readonly("phi", &shock_profile::ShockProfile::phi)
        .def_readonly("vp", &shock_profile::ShockProfile::vp)
        .def("eval", [](const shock_profile::ShockProfile& p, double xi) {
            const auto pt = p.eval(xi);
            return py::make_tuple(pt.v, pt.u, pt.phi, pt.h);
        });

    m.def("solve_profile", &shock_profile::solve_profile, py::arg("fan"),
          py::arg("L") = 0.0, py::arg("tol") = 1e-11);
    m.def("profile_residual", &shock_profile::residual_unreduced);

    py::class_<rarefaction::RarefactionField>(m, "RarefactionField")
        .def(py::init<const thermo::RiemannFan&>())
        .def("eval", [](const rarefaction::RarefactionField& f, double t, double x) {
            const auto p = rarefaction::eval(f, t, x);
            return py::make_tuple(p.v, p.u, p.phi);
        });

    m.def("solve_poisson",
          [](double dxi, const std::vector<double>& v, double phi_left,
             double phi_right) {
              poisson::Problem prob;
              prob.dxi = dxi;
              prob.v = v;
              prob.phi_left = phi_left;
              prob.phi_right = phi_right;
              std::vector<double> guess(v.size(), 0.0);
              guess.front() = phi_left;
              guess.back() = phi_right;
              return poisson::solve_phi(prob, guess).phi;
          },
          py::arg("dxi"), py::arg("v"), py::arg("phi_left"), py::arg("phi_right"));

    m.def("relative_Q", &functionals::relative_Q, py::arg("v"), py::arg("vbar"));
    m.def("relative_pressure", &functionals::relative_pressure, py::arg("v"),
          py::arg("vbar"));

    m.def("run_acceptance",
          [](const std::vector<int>& ids, unsigned seed) {
              py::list out;
              for (const auto& r : acceptance::run(ids, seed)) {
                  py::dict d;
                  d["id"] = r.id;
                  d["name"] = r.name;
                  d["passed"] = r.passed;
                  d["detail"] = r.detail;
                  d["seconds"] = r.seconds;
                  out.append(d);
              }
              return out;
          },
          py::arg("ids") = std::vector<int>{}, py::arg("seed") = 12345u);
}
