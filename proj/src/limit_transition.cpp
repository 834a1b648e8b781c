#include "hyplab/limit_transition.hpp"

#include <cmath>
#include <stdexcept>

#include "hyplab/quadrature.hpp"
#include "hyplab/special.hpp"

namespace hyplab {

double limit_residual_jacobi_to_laguerre(unsigned n, double alpha, double beta_scale, double x) {
    if (x < 0.0 || !(beta_scale > 2.0 * x))
        throw std::domain_error("limit_residual_jacobi_to_laguerre: need 0 <= x < beta/2");
    const double arg = 1.0 - 2.0 * x / beta_scale;
    const double jac =
        eval_classical(PolyFamily::jacobi(alpha, beta_scale), n, arg).to_double();
    const double lag = eval_classical(PolyFamily::laguerre(alpha), n, x).to_double();
    return std::fabs(jac - lag);
}

double limit_residual_gegenbauer_to_hermite(unsigned n, double lambda_scale, double x) {
    if (!(lambda_scale > 0.0) || !(x * x < lambda_scale))
        throw std::domain_error("limit_residual_gegenbauer_to_hermite: need |x| < sqrt(lambda)");
    const double arg = x / std::sqrt(lambda_scale);
    const LogValue geg = eval_classical(PolyFamily::gegenbauer(lambda_scale), n, arg) *
                         LogValue::from_log(1, -0.5 * n * std::log(lambda_scale));
    const LogValue her = eval_classical(PolyFamily::hermite(), n, x) /
                         LogValue::from_log(1, log_gamma(n + 1.0));
    return std::fabs(geg.to_double() - her.to_double());
}

LogValue rescaled_lower_bound(double alpha, double beta_scale, double t, double p, double q,
                              unsigned n, double quad_tol) {
    if (!(q > 2.0)) throw std::invalid_argument("rescaled_lower_bound: q > 2 branch only");
    if (!(t > 0.0) || !(p >= 1.0) || !(beta_scale > 0.0))
        throw std::invalid_argument("rescaled_lower_bound: t > 0, p >= 1, beta > 0");
    const PolyFamily fam = PolyFamily::jacobi(alpha, beta_scale);
    fam.validate();
    if (n == 0) return LogValue::one();
    const double prefactor = -(t / std::sqrt(beta_scale)) * std::sqrt(fam.eigenvalue(n));
    const LogValue nq = normalized_poly_lp_norm(fam, n, q, quad_tol);
    const LogValue np = (p == 2.0) ? LogValue::one()
                                   : normalized_poly_lp_norm(fam, n, p, quad_tol);
    return LogValue::from_log(1, prefactor) * nq / np;
}

LogValue laguerre_limit_bound(double alpha, double t, double p, double q, unsigned n,
                              double quad_tol) {
    if (!(q > 2.0)) throw std::invalid_argument("laguerre_limit_bound: q > 2 branch only");
    const PolyFamily fam = PolyFamily::laguerre(alpha);
    fam.validate();
    if (n == 0) return LogValue::one();
    const LogValue nq = normalized_poly_lp_norm(fam, n, q, quad_tol);
    const LogValue np = (p == 2.0) ? LogValue::one()
                                   : normalized_poly_lp_norm(fam, n, p, quad_tol);
    return LogValue::from_log(1, -t * std::sqrt(static_cast<double>(n))) * nq / np;
}

DegenerationCertificate degeneration_certificate(double alpha, double t, double p, double q,
                                                 double M, unsigned n_cap, double beta_cap) {
    if (!(M > 0.0)) throw std::invalid_argument("degeneration_certificate: M > 0");
    DegenerationCertificate cert;
    const double log_4m = std::log(4.0 * M);
    unsigned n_star = 0;
    bool have_n = false;
    for (unsigned n = 0; n <= n_cap; ++n) {
        const LogValue lim = laguerre_limit_bound(alpha, t, p, q, std::max(n, 0u));
        if (lim.logmag > log_4m) {
            n_star = n;
            have_n = true;
            break;
        }
    }
    if (!have_n) return cert;  // cap exhausted before the limit values clear 4M
    cert.n = n_star;
    const double log_2m = std::log(2.0 * M);
    for (double beta = 1e2; beta <= beta_cap * 1.0000001; beta *= 10.0) {
        const LogValue v = rescaled_lower_bound(alpha, beta, t, p, q, n_star);
        if (v.logmag > cert.bound.logmag || cert.bound.is_zero()) {
            cert.bound = v;
            cert.beta0 = beta;
        }
        if (v.logmag > log_2m) {
            cert.found = true;
            cert.beta0 = beta;
            cert.bound = v;
            return cert;
        }
    }
    return cert;
}

}  // namespace hyplab
