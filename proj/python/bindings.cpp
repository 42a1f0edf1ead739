#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "freqgap/identity.hpp"
#include "freqgap/oscillation.hpp"
#include "freqgap/profile.hpp"
#include "freqgap/solutions.hpp"

namespace py = pybind11;
using namespace freqgap;

namespace {

Method parse_method(const std::string& s) {
    if (s == "series") return Method::Series;
    if (s == "ode") return Method::Ode;
    throw std::invalid_argument("method must be 'series' or 'ode'");
}

CapKind parse_kind(const std::string& s) {
    if (s == "dirichlet") return CapKind::Dirichlet;
    if (s == "neumann") return CapKind::Neumann;
    throw std::invalid_argument("kind must be 'dirichlet' or 'neumann'");
}

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

} // namespace

PYBIND11_MODULE(freqgap, m) {
    m.doc() = "radial profiles, oscillation counts, and frequency-gap verdicts for the thin "
              "obstacle problem";
    m.attr("__version__") = "0.1.0";

    // exception mapping: later registrations are tried first, so the base goes first
    py::register_exception<Error>(m, "FreqgapError", PyExc_RuntimeError);
    py::register_exception<InvalidFrequency>(m, "InvalidFrequencyError", PyExc_ValueError);
    py::register_exception<InvalidDimension>(m, "InvalidDimensionError", PyExc_ValueError);

    py::enum_<Sign>(m, "Sign", py::arithmetic())
        .value("Neg", Sign::Neg)
        .value("Zero", Sign::Zero)
        .value("Pos", Sign::Pos);

    py::enum_<GapStatus>(m, "GapStatus")
        .value("Excluded", GapStatus::Excluded)
        .value("NotExcluded", GapStatus::NotExcluded)
        .value("IntegerBoundary", GapStatus::IntegerBoundary)
        .value("Indeterminate", GapStatus::Indeterminate);

    py::enum_<Family>(m, "Family")
        .value("EvenPoly", Family::EvenPoly)
        .value("OddReflected", Family::OddReflected)
        .value("ThreeHalves", Family::ThreeHalves);

    py::class_<ProfilePoint>(m, "ProfilePoint")
        .def_readonly("phi", &ProfilePoint::phi)
        .def_readonly("p", &ProfilePoint::p)
        .def_readonly("dp", &ProfilePoint::dp)
        .def_readonly("err", &ProfilePoint::err)
        .def("__repr__", [](const ProfilePoint& v) {
            return "ProfilePoint(phi=" + fmt(v.phi) + ", p=" + fmt(v.p) + ", dp=" + fmt(v.dp) +
                   ", err=" + fmt(v.err) + ")";
        });

    py::class_<EndpointValues>(m, "EndpointValues")
        .def_readonly("p_half", &EndpointValues::p_half)
        .def_readonly("dp_half", &EndpointValues::dp_half)
        .def_readonly("err_p", &EndpointValues::err_p)
        .def_readonly("err_dp", &EndpointValues::err_dp)
        .def("__repr__", [](const EndpointValues& v) {
            return "EndpointValues(p_half=" + fmt(v.p_half) + ", dp_half=" + fmt(v.dp_half) + ")";
        });

    py::class_<SignPair>(m, "SignPair")
        .def_readonly("sign_p", &SignPair::sign_p)
        .def_readonly("sign_dp", &SignPair::sign_dp);

    py::class_<OscillationReport>(m, "OscillationReport")
        .def_readonly("zeros", &OscillationReport::zeros)
        .def_readonly("crits", &OscillationReport::crits)
        .def_readonly("total", &OscillationReport::total);

    py::class_<GapVerdict>(m, "GapVerdict")
        .def_readonly("status", &GapVerdict::status)
        .def_readonly("k", &GapVerdict::k)
        .def_readonly("sign_product", &GapVerdict::sign_product)
        .def_readonly("margin_ok", &GapVerdict::margin_ok)
        .def("__repr__", [](const GapVerdict& v) {
            const char* s = v.status == GapStatus::Excluded         ? "Excluded"
                            : v.status == GapStatus::NotExcluded    ? "NotExcluded"
                            : v.status == GapStatus::IntegerBoundary ? "IntegerBoundary"
                                                                     : "Indeterminate";
            return std::string("GapVerdict(status=") + s + ", k=" + std::to_string(v.k) + ")";
        });

    py::class_<ExplicitSolution>(m, "ExplicitSolution")
        .def_readonly("family", &ExplicitSolution::family)
        .def_readonly("k", &ExplicitSolution::k)
        .def_readonly("dim", &ExplicitSolution::dim)
        .def_readonly("lambda_", &ExplicitSolution::lambda)
        .def("__repr__", [](const ExplicitSolution& s) {
            const char* f = s.family == Family::EvenPoly       ? "EvenPoly"
                            : s.family == Family::OddReflected ? "OddReflected"
                                                               : "ThreeHalves";
            return std::string("ExplicitSolution(") + f + ", k=" + std::to_string(s.k) +
                   ", dim=" + std::to_string(s.dim) + ", lambda=" + fmt(s.lambda) + ")";
        });

    py::class_<CheckReport>(m, "CheckReport")
        .def_readonly("passed", &CheckReport::passed)
        .def_readonly("samples", &CheckReport::samples)
        .def_readonly("min_u_thin", &CheckReport::min_u_thin)
        .def_readonly("max_un_thin", &CheckReport::max_un_thin)
        .def_readonly("max_homogeneity_rel", &CheckReport::max_homogeneity_rel)
        .def_readonly("max_harmonic_rel", &CheckReport::max_harmonic_rel);

    py::class_<EquatorIntegrals>(m, "EquatorIntegrals")
        .def_readonly("int_u", &EquatorIntegrals::int_u)
        .def_readonly("int_un", &EquatorIntegrals::int_un)
        .def_readonly("quad_err", &EquatorIntegrals::quad_err);

    py::class_<IdentityReport>(m, "IdentityReport")
        .def_readonly("lhs", &IdentityReport::lhs)
        .def_readonly("rhs", &IdentityReport::rhs)
        .def_readonly("residual_abs", &IdentityReport::residual_abs)
        .def_readonly("residual_rel", &IdentityReport::residual_rel)
        .def_readonly("pass_", &IdentityReport::pass)
        .def("__repr__", [](const IdentityReport& r) {
            return "IdentityReport(lhs=" + fmt(r.lhs) + ", rhs=" + fmt(r.rhs) +
                   ", residual_rel=" + fmt(r.residual_rel) + ", pass=" +
                   (r.pass ? "True" : "False") + ")";
        });

    m.def("mu", &mu, py::arg("lam"), py::arg("dim"),
          "eigenvalue lambda*(lambda+dim-2) of the homogeneity degree");
    m.def(
        "eval_profile",
        [](double lam, int dim, double phi, const std::string& method) {
            return eval_profile(make_query(lam, dim), phi, parse_method(method));
        },
        py::arg("lam"), py::arg("dim"), py::arg("phi"), py::arg("method") = "series",
        "radial profile p and p' at polar angle phi in [0, pi/2]");
    m.def(
        "endpoint_values",
        [](double lam, int dim) { return endpoint_values(make_query(lam, dim)); }, py::arg("lam"),
        py::arg("dim"), "closed-form p(pi/2), p'(pi/2) with rounding-error bounds");
    m.def("endpoint_signs_predicted", &endpoint_signs_predicted, py::arg("lam"),
          "equator signs predicted from lambda mod 4");
    m.def(
        "endpoint_signs_certified",
        [](double lam, int dim, double margin) {
            return endpoint_signs_certified(make_query(lam, dim), margin);
        },
        py::arg("lam"), py::arg("dim"), py::arg("margin") = 1000.0);
    m.def(
        "cross_validate",
        [](double lam, int dim, int grid) { return cross_validate(make_query(lam, dim), grid); },
        py::arg("lam"), py::arg("dim"), py::arg("grid") = 33,
        "max series-vs-ode disagreement over a phi grid");
    m.def(
        "find_special_points",
        [](double lam, int dim) { return find_special_points(make_query(lam, dim)); },
        py::arg("lam"), py::arg("dim"), "zeros and critical points of p in (0, pi/2)");
    m.def(
        "interlacing_check",
        [](double lam_low, double lam_high, int dim) {
            return interlacing_check(make_query(lam_low, dim), make_query(lam_high, dim));
        },
        py::arg("lam_low"), py::arg("lam_high"), py::arg("dim"));
    m.def(
        "cap_frequency",
        [](double theta, int dim, const std::string& kind, int branch) {
            return cap_frequency(CapQuery{theta, dim, parse_kind(kind), branch});
        },
        py::arg("theta"), py::arg("dim"), py::arg("kind") = "dirichlet", py::arg("branch") = 1,
        "branch-th eigenfrequency of the spherical cap of aperture theta");
    m.def(
        "gap_verdict", [](double lam, int dim) { return gap_verdict(make_query(lam, dim)); },
        py::arg("lam"), py::arg("dim"), "frequency-gap classification of lambda");
    m.def("make_solution", &make_solution, py::arg("family"), py::arg("k"), py::arg("dim"));
    m.def("catalog", &catalog, py::arg("lambda_max"), py::arg("dim"),
          "all explicit solutions with lambda <= lambda_max");
    m.def("eval_u", &eval_u, py::arg("solution"), py::arg("x"));
    m.def(
        "eval_un",
        [](const ExplicitSolution& s, const std::vector<double>& coords) {
            return eval_un(s, thin_point(coords));
        },
        py::arg("solution"), py::arg("x"), "one-sided normal derivative on the thin space");
    m.def("check_solution", &check_solution, py::arg("solution"), py::arg("samples") = 2000,
          py::arg("seed") = 20260814u,
          "randomized verification of the defining properties of an explicit solution");
    m.def("equator_integrals", &equator_integrals, py::arg("solution"));
    m.def("verify_identity", &verify_identity, py::arg("solution"),
          "equator pairing identity between u and its normal derivative");
}
