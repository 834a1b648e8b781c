#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyplab/bernstein.hpp"
#include "hyplab/certify.hpp"
#include "hyplab/limit_transition.hpp"
#include "hyplab/norm_bounds.hpp"
#include "hyplab/obstruction.hpp"
#include "hyplab/orthopoly.hpp"
#include "hyplab/poincare.hpp"
#include "hyplab/quadrature.hpp"
#include "hyplab/subordination.hpp"

namespace py = pybind11;
using namespace hyplab;

PYBIND11_MODULE(_hyplab, m) {
    m.doc() = "numerical laboratory for subordinated semigroup norm bounds";

    py::class_<LogValue>(m, "LogValue")
        .def_readonly("sign", &LogValue::sign)
        .def_readonly("logmag", &LogValue::logmag)
        .def("to_float", &LogValue::to_double)
        .def("__float__", &LogValue::to_double)
        .def("__repr__", [](const LogValue& v) {
            return "LogValue(sign=" + std::to_string(v.sign) +
                   ", logmag=" + std::to_string(v.logmag) + ")";
        });

    py::class_<PolyFamily>(m, "PolyFamily")
        .def_static("hermite", &PolyFamily::hermite)
        .def_static("laguerre", &PolyFamily::laguerre, py::arg("alpha"))
        .def_static("jacobi", &PolyFamily::jacobi, py::arg("alpha"), py::arg("beta"))
        .def_static("gegenbauer", &PolyFamily::gegenbauer, py::arg("lambda_"))
        .def("eigenvalue", &PolyFamily::eigenvalue)
        .def("name", &PolyFamily::name);

    m.def("eval_classical", &eval_classical);
    m.def("eval_normalized", &eval_normalized);
    m.def("normalized_poly_lp_norm", &normalized_poly_lp_norm, py::arg("family"), py::arg("n"),
          py::arg("p"), py::arg("tol") = 1e-10);

    py::class_<BernsteinFn>(m, "BernsteinFn")
        .def_static("poisson", &BernsteinFn::poisson)
        .def_static("identity", &BernsteinFn::identity)
        .def_static("stable", &BernsteinFn::stable, py::arg("theta"))
        .def_static("from_json",
                    [](const std::string& s) {
                        return BernsteinFn::from_json(nlohmann::json::parse(s));
                    })
        .def("__call__", &BernsteinFn::operator())
        .def("killing", &BernsteinFn::killing)
        .def("drift", &BernsteinFn::drift)
        .def("drift_estimate", &BernsteinFn::drift_estimate);

    py::class_<HermiteBounds>(m, "HermiteBounds")
        .def_readonly("lower", &HermiteBounds::lower)
        .def_readonly("upper", &HermiteBounds::upper);
    m.def("hermite_bounds", &hermite_bounds);

    py::class_<NormBoundReport>(m, "NormBoundReport")
        .def_readonly("n", &NormBoundReport::n)
        .def_readonly("q", &NormBoundReport::q)
        .def_readonly("measured", &NormBoundReport::measured)
        .def_readonly("lower", &NormBoundReport::lower)
        .def_readonly("upper", &NormBoundReport::upper)
        .def_readonly("passed", &NormBoundReport::passed);
    m.def("hermite_sandwich", &hermite_sandwich, py::arg("n"), py::arg("q"),
          py::arg("quad_tol") = 1e-8, py::arg("slack") = 1e-8);
    m.def("laguerre_lower", &laguerre_lower);
    m.def("laguerre_upper", &laguerre_upper);
    m.def("fourier_coefficient", &fourier_coefficient);
    m.def("fourier_coefficient_quadrature", &fourier_coefficient_quadrature, py::arg("family"),
          py::arg("n"), py::arg("b"), py::arg("tol") = 1e-12);
    m.def("growth_rate", &growth_rate, py::arg("family"), py::arg("p"), py::arg("q"),
          py::arg("n_lo"), py::arg("n_hi"), py::arg("quad_tol") = 1e-8);

    m.def("poisson_kernel_identity", &poisson_kernel_identity, py::arg("t"), py::arg("lam"),
          py::arg("tol") = 1e-10);

    py::class_<HeatKernelResult>(m, "HeatKernelResult")
        .def_readonly("value", &HeatKernelResult::value)
        .def_readonly("terms", &HeatKernelResult::terms)
        .def_readonly("tail_bound", &HeatKernelResult::tail_bound);
    m.def("jacobi_heat_kernel", &jacobi_heat_kernel, py::arg("alpha"), py::arg("beta"),
          py::arg("s"), py::arg("x"), py::arg("y"), py::arg("tail_rel_bound") = 1e-12,
          py::arg("n_cap") = 20000);

    py::class_<UltraEstimate>(m, "UltraEstimate")
        .def_readonly("value", &UltraEstimate::value)
        .def_readonly("arg_x", &UltraEstimate::arg_x)
        .def_readonly("arg_y", &UltraEstimate::arg_y);
    m.def("ultra_norm_estimate", &ultra_norm_estimate, py::arg("alpha"), py::arg("beta"),
          py::arg("s"), py::arg("grid") = 33);
    m.def("poisson_ultra_bound", &poisson_ultra_bound);

    m.def("eigen_lower_bound", &eigen_lower_bound, py::arg("family"), py::arg("f"),
          py::arg("t"), py::arg("p"), py::arg("q"), py::arg("n"), py::arg("quad_tol") = 1e-8);
    m.def("f_series", &f_series, py::arg("f"), py::arg("t"), py::arg("z"),
          py::arg("tol") = 1e-12);
    m.def("f_series_slope", &f_series_slope, py::arg("f"), py::arg("t"), py::arg("z0"),
          py::arg("tol") = 1e-12);
    m.def("bilinear_value", &bilinear_value, py::arg("f"), py::arg("t"), py::arg("p"),
          py::arg("q"), py::arg("tau1"), py::arg("tau2"), py::arg("tol") = 1e-12);
    m.def("bilinear_vertex_ray", &bilinear_vertex_ray);

    py::class_<Classification>(m, "Classification")
        .def_readonly("blow_up", &Classification::blow_up)
        .def_readonly("log_norm", &Classification::log_norm)
        .def_readonly("threshold_q", &Classification::threshold_q)
        .def_readonly("discriminant", &Classification::discriminant);
    m.def("classify_ou", &classify_ou);
    m.def("classify_laguerre", &classify_laguerre);

    py::class_<NecessaryConditionReport>(m, "NecessaryConditionReport")
        .def_readonly("roots", &NecessaryConditionReport::roots)
        .def_readonly("first_violation", &NecessaryConditionReport::first_violation)
        .def_readonly("threshold", &NecessaryConditionReport::threshold)
        .def_readonly("rho_limit", &NecessaryConditionReport::rho_limit);
    m.def("multiplier_necessary_condition", &multiplier_necessary_condition, py::arg("a_seq"),
          py::arg("alpha"), py::arg("p"), py::arg("q"), py::arg("n_max"),
          py::arg("margin") = 1e-9);

    m.def("bernstein_inverse", &bernstein_inverse, py::arg("f"), py::arg("u"),
          py::arg("rel_tol") = 1e-12);

    m.def("limit_residual_jacobi_to_laguerre", &limit_residual_jacobi_to_laguerre);
    m.def("limit_residual_gegenbauer_to_hermite", &limit_residual_gegenbauer_to_hermite);
    m.def("rescaled_lower_bound", &rescaled_lower_bound, py::arg("alpha"),
          py::arg("beta_scale"), py::arg("t"), py::arg("p"), py::arg("q"), py::arg("n"),
          py::arg("quad_tol") = 1e-8);

    py::class_<DegenerationCertificate>(m, "DegenerationCertificate")
        .def_readonly("found", &DegenerationCertificate::found)
        .def_readonly("n", &DegenerationCertificate::n)
        .def_readonly("beta0", &DegenerationCertificate::beta0)
        .def_readonly("bound", &DegenerationCertificate::bound);
    m.def("degeneration_certificate", &degeneration_certificate, py::arg("alpha"), py::arg("t"),
          py::arg("p"), py::arg("q"), py::arg("M"), py::arg("n_cap") = 100,
          py::arg("beta_cap") = 1e6);

    py::class_<Certification>(m, "Certification")
        .def_readonly("id", &Certification::id)
        .def_readonly("name", &Certification::name)
        .def_readonly("passed", &Certification::passed)
        .def_readonly("detail", &Certification::detail);
    m.def("certify_all", &certify_all);
}
