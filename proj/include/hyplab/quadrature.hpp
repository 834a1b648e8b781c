#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyplab/log_value.hpp"
#include "hyplab/orthopoly.hpp"

namespace hyplab {

enum class MeasureKind {
    Gaussian,                // pi^{-1/2} e^{-x^2} dx on R
    Gamma,                   // Gamma(a+1)^{-1} x^a e^{-x} dx on (0, inf)
    Jacobi,                  // Z_{a,b}^{-1} (1-x)^a (1+x)^b dx on (-1, 1)
    RescaledJacobiNearOne,   // c_{a,b} y^a (1-y/b)^b dy on (0, b)
    RescaledSymmetricJacobi  // d_l (1-y^2/l)^{l-1/2} dy on (-sqrt l, sqrt l)
};

/// Invariant probability measure of one of the classical families, or a
/// finite-parameter rescaling of the Jacobi measure.
struct Measure {
    MeasureKind kind = MeasureKind::Gaussian;
    double alpha = 0.0;
    double beta = 0.0;    // Jacobi second parameter; scale for RescaledJacobiNearOne
    double lambda = 0.0;  // scale for RescaledSymmetricJacobi

    static Measure gaussian() { return {MeasureKind::Gaussian}; }
    static Measure gamma(double alpha) { return {MeasureKind::Gamma, alpha}; }
    static Measure jacobi(double alpha, double beta) { return {MeasureKind::Jacobi, alpha, beta}; }
    static Measure rescaled_jacobi_near_one(double alpha, double beta_scale) {
        return {MeasureKind::RescaledJacobiNearOne, alpha, beta_scale};
    }
    static Measure rescaled_symmetric_jacobi(double lambda) {
        return {MeasureKind::RescaledSymmetricJacobi, 0, 0, lambda};
    }

    /// Natural measure of a polynomial family.
    static Measure of(const PolyFamily& family);

    void validate() const;
    std::string name() const;
};

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    unsigned exactness_degree = 0;  // exact for polynomials up to this degree
};

/// m-point Gauss rule for the measure, exact on polynomials of degree
/// <= 2m - 1. Golub-Welsch on the classical monic recurrences; rescaled
/// measures reuse the Jacobi nodes under the affine/scaling maps.
QuadratureRule gauss_rule(const Measure& measure, unsigned m);

struct IntegrationConfig {
    unsigned start_nodes = 64;
    unsigned max_nodes = 16384;
    double rel_tol = 1e-10;
};

/// Signed integral of f against the measure, node-doubled until two
/// successive estimates agree to rel_tol on the scale of the |f|
/// integral. Throws std::runtime_error on non-convergence at the cap.
LogValue integrate(const std::function<LogValue(double)>& f, const Measure& measure,
                   const IntegrationConfig& cfg = {});

/// (integral of |f|^p d mu)^{1/p} in log scale.
LogValue lp_norm(const std::function<LogValue(double)>& f, double p, const Measure& measure,
                 double tol = 1e-10);

/// L^p norm of the L^2-normalized degree-n family polynomial on its own
/// invariant measure. Rules are cached internally.
LogValue normalized_poly_lp_norm(const PolyFamily& family, unsigned n, double p,
                                 double tol = 1e-10);

/// Exponential moment: integral of e^{sx} d mu. Closed form for
/// Gaussian (e^{s^2/4}) and Gamma ((1-s)^{-(alpha+1)}, s < 1);
/// quadrature for the compactly supported measures.
double exp_moment(const Measure& measure, double s);

/// Inner product <phi_n, e^{bx}> of a degree-n polynomial against the
/// exponential, with the Taylor polynomial of e^{bx} below degree n
/// removed analytically (it is orthogonal to phi_n), so the quadrature
/// resolves coefficients that are many orders below the integrand's
/// bulk. `poly` must be orthogonal to all polynomials of degree < n.
LogValue poly_exp_inner(const std::function<LogValue(double)>& poly, unsigned n, double b,
                        const Measure& measure, const IntegrationConfig& cfg = {});

}  // namespace hyplab
