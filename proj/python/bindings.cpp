// Python bindings for the core operations: normalized Gamma factors,
// K-Bessel routes, representation parameters and L-factors, Whittaker
// radial values, zeta pairings and the identity verifier.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "arwhit/contour.hpp"
#include "arwhit/whittaker.hpp"
#include "arwhit/zeta.hpp"

namespace py = pybind11;
using namespace arwhit;

namespace {

BesselMethod bessel_method(const std::string& name) {
    if (name == "integral") return BesselMethod::integral;
    if (name == "mellin_barnes") return BesselMethod::mellin_barnes;
    if (name == "series") return BesselMethod::series;
    throw std::invalid_argument("unknown bessel method: " + name);
}

Gl2Method gl2_method(const std::string& name) {
    if (name == "closed_form") return Gl2Method::closed_form;
    if (name == "mellin_barnes") return Gl2Method::mellin_barnes;
    throw std::invalid_argument("unknown gl2 method: " + name);
}

Gl3Method gl3_method(const std::string& name) {
    if (name == "mellin_barnes") return Gl3Method::mellin_barnes;
    if (name == "series") return Gl3Method::series;
    throw std::invalid_argument("unknown gl3 method: " + name);
}

Field field_of(const std::string& name) {
    if (name == "R") return Field::R;
    if (name == "C") return Field::C;
    throw std::invalid_argument("unknown field: " + name);
}

IdentityId identity_id(const std::string& name) {
    if (name == "barnes_first") return IdentityId::barnes_first;
    if (name == "barnes_exchange") return IdentityId::barnes_exchange;
    if (name == "barnes_second") return IdentityId::barnes_second;
    if (name == "barnes_second_sum") return IdentityId::barnes_second_sum;
    if (name == "gauss_sum") return IdentityId::gauss_sum;
    if (name == "cr_barnes") return IdentityId::cr_barnes;
    throw std::invalid_argument("unknown identity: " + name);
}

py::dict report_dict(const IdentityReport& r) {
    py::dict d;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["rel_error"] = r.rel_error;
    d["nodes_used"] = r.nodes_used;
    return d;
}

} // namespace

PYBIND11_MODULE(_arwhit, m) {
    m.doc() = "archimedean Whittaker functions, local L-factors and "
              "Rankin-Selberg zeta pairings";

    py::register_exception<NumericError>(m, "NumericError");

    // --- gamma kernel --------------------------------------------------------
    m.def(
        "gamma", [](cplx z) { return arwhit::gamma(z); }, py::arg("z"));
    m.def(
        "log_gamma", [](cplx z) { return arwhit::log_gamma(z); },
        py::arg("z"));
    m.def("gamma_r", &gamma_r, py::arg("s"),
          "pi^{-s/2} Gamma(s/2)");
    m.def("gamma_c", &gamma_c, py::arg("s"),
          "2 (2 pi)^{-s} Gamma(s)");
    m.def(
        "bessel_k",
        [](cplx r, double z, const std::string& method) {
            return bessel_k(r, z, bessel_method(method));
        },
        py::arg("r"), py::arg("z"), py::arg("method") = "integral",
        "K_r(z) by 'integral', 'mellin_barnes' or 'series'");

    // --- representation parameters ------------------------------------------
    py::class_<RealGL2Rep>(m, "RealGL2Rep");
    py::class_<RealGL3Rep>(m, "RealGL3Rep");
    py::class_<ComplexRep>(m, "ComplexRep");
    m.def("gl2r_principal", &gl2r_principal, py::arg("nu1"), py::arg("delta1"),
          py::arg("nu2"), py::arg("delta2"));
    m.def("gl2r_discrete", &gl2r_discrete, py::arg("nu"), py::arg("kappa"));
    m.def("gl3r_principal", &gl3r_principal, py::arg("nu1"), py::arg("delta1"),
          py::arg("nu2"), py::arg("delta2"), py::arg("nu3"),
          py::arg("delta3"));
    m.def("gl3r_generalized", &gl3r_generalized, py::arg("nu1"),
          py::arg("kappa1"), py::arg("nu2"), py::arg("delta2"));
    m.def("glc_principal", &glc_principal, py::arg("chars"),
          "principal series of GL(n, C) from [(nu, d), ...]");

    // --- L-factors -----------------------------------------------------------
    m.def(
        "l_factor",
        [](const RepParam& rep, cplx s) {
            return l_factor(weil_param(rep), s);
        },
        py::arg("rep"), py::arg("s"));
    m.def("rankin_l", &rankin_l, py::arg("rep"), py::arg("rep_p"),
          py::arg("s"), "L-factor of the tensor-product parameter");
    m.def(
        "twisted_l",
        [](const RepParam& rep, cplx nu_p, int k_p, cplx s) {
            if (auto* r = std::get_if<RealGL2Rep>(&rep))
                return l_factor(gl1_twist(*r, nu_p, k_p), s);
            if (auto* c = std::get_if<ComplexRep>(&rep))
                return l_factor(gl1_twist(*c, nu_p, k_p), s);
            throw std::invalid_argument("expected a GL(2) representation");
        },
        py::arg("rep"), py::arg("nu_p"), py::arg("k_p"), py::arg("s"),
        "L-factor of the GL(1) twist of a GL(2) representation");

    // --- Whittaker radial values ----------------------------------------------
    m.def(
        "whittaker_gl2r",
        [](const RealGL2Rep& rep, int eps, int q, double y1, double y2,
           const std::string& method) {
            return gl2r_whittaker(rep, eps, q, {y1, y2}, gl2_method(method));
        },
        py::arg("rep"), py::arg("eps"), py::arg("q"), py::arg("y1"),
        py::arg("y2") = 1.0, py::arg("method") = "closed_form");
    m.def(
        "whittaker_gl2c",
        [](const ComplexRep& rep, int eps, int l, int q, double y1,
           double y2) { return gl2c_whittaker(rep, eps, l, q, {y1, y2}); },
        py::arg("rep"), py::arg("eps"), py::arg("l"), py::arg("q"),
        py::arg("y1"), py::arg("y2") = 1.0);
    m.def(
        "whittaker_gl3r",
        [](const RealGL3Rep& rep, int eps, std::array<int, 3> l, double y1,
           double y2, const std::string& method) {
            return gl3r_whittaker(rep, eps, l, {y1, y2}, gl3_method(method));
        },
        py::arg("rep"), py::arg("eps"), py::arg("l"), py::arg("y1"),
        py::arg("y2"), py::arg("method") = "mellin_barnes");
    m.def(
        "whittaker_gl3c",
        [](const ComplexRep& rep, int eps, std::array<int, 6> l, double y1,
           double y2) { return gl3c_whittaker(rep, eps, l, {y1, y2}); },
        py::arg("rep"), py::arg("eps"), py::arg("l"), py::arg("y1"),
        py::arg("y2"));

    // --- zeta pairings ---------------------------------------------------------
    py::class_<LogGrid>(m, "LogGrid")
        .def(py::init([](double u_min, double u_max, int nodes) {
                 return LogGrid{u_min, u_max, nodes};
             }),
             py::arg("u_min") = -6.0, py::arg("u_max") = 4.0,
             py::arg("nodes") = 240)
        .def_readwrite("u_min", &LogGrid::u_min)
        .def_readwrite("u_max", &LogGrid::u_max)
        .def_readwrite("nodes", &LogGrid::nodes);
    py::class_<ZetaConfig>(m, "ZetaConfig")
        .def(py::init([](LogGrid grid1, LogGrid grid2, double tol,
                         double tail_tol) {
                 return ZetaConfig{grid1, grid2, tol, tail_tol};
             }),
             py::arg("grid1") = LogGrid{}, py::arg("grid2") = LogGrid{},
             py::arg("tol") = 1e-8, py::arg("tail_tol") = 1e-10)
        .def_readwrite("grid1", &ZetaConfig::grid1)
        .def_readwrite("grid2", &ZetaConfig::grid2)
        .def_readwrite("tol", &ZetaConfig::tol)
        .def_readwrite("tail_tol", &ZetaConfig::tail_tol);

    m.def(
        "zeta_gl2_gl1",
        [](const RepParam& rep, cplx nu_p, int k_p, int eps, cplx s,
           const ZetaConfig& cfg) {
            if (auto* r = std::get_if<RealGL2Rep>(&rep))
                return zeta_gl2_gl1(*r, nu_p, k_p, eps, s, cfg);
            if (auto* c = std::get_if<ComplexRep>(&rep))
                return zeta_gl2_gl1(*c, nu_p, k_p, eps, s, cfg);
            throw std::invalid_argument("expected a GL(2) representation");
        },
        py::arg("rep"), py::arg("nu_p"), py::arg("k_p"), py::arg("eps"),
        py::arg("s"), py::arg("cfg") = ZetaConfig{});
    m.def(
        "zeta_gl2_gl2",
        [](const RepParam& rep, const RepParam& rep_p, int eps, cplx s,
           const ZetaConfig& cfg) {
            if (auto* r = std::get_if<RealGL2Rep>(&rep))
                return zeta_gl2_gl2(*r, std::get<RealGL2Rep>(rep_p), eps, s,
                                    cfg);
            if (auto* c = std::get_if<ComplexRep>(&rep))
                return zeta_gl2_gl2(*c, std::get<ComplexRep>(rep_p), eps, s,
                                    cfg);
            throw std::invalid_argument("expected GL(2) representations");
        },
        py::arg("rep"), py::arg("rep_p"), py::arg("eps"), py::arg("s"),
        py::arg("cfg") = ZetaConfig{});
    m.def("c22_constant", &c22_constant, py::arg("rep"), py::arg("rep_p"));
    m.def("c32_constant", &c32_constant, py::arg("rep3"), py::arg("rep2"));

    // --- identity verification -------------------------------------------------
    m.def(
        "verify_identity",
        [](const std::string& which, const std::string& field,
           const std::vector<cplx>& params, double tol) {
            return report_dict(
                verify_identity(identity_id(which), field_of(field), params,
                                tol));
        },
        py::arg("which"), py::arg("field"), py::arg("params"),
        py::arg("tol") = 1e-10);

    m.def("rel_error_of", &rel_error_of, py::arg("lhs"), py::arg("rhs"));
    m.attr("__version__") = "0.1.0";
}
