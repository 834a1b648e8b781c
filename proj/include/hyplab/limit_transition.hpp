#pragma once

#include <optional>

#include "hyplab/log_value.hpp"
#include "hyplab/orthopoly.hpp"

namespace hyplab {

/// Askey-limit residual |J_n^{(alpha,beta)}(1 - 2x/beta) - L_n^alpha(x)|;
/// requires x >= 0 and beta_scale > 2x so the Jacobi argument stays in
/// (-1, 1].
double limit_residual_jacobi_to_laguerre(unsigned n, double alpha, double beta_scale, double x);

/// Askey-limit residual |lambda^{-n/2} C_n^lambda(x / sqrt(lambda)) - H_n(x)/n!|;
/// requires |x| < sqrt(lambda_scale).
double limit_residual_gegenbauer_to_hermite(unsigned n, double lambda_scale, double x);

/// Rescaled Poisson-Jacobi eigenfunction lower bound
///   e^{-(t/sqrt(beta)) sqrt(lambda_n^{(alpha,beta)})} ||j_n||_q / ||j_n||_p,
/// with the norms taken on the unrescaled Jacobi measure (the rescaling
/// maps are p-norm isometries). Requires q > 2.
LogValue rescaled_lower_bound(double alpha, double beta_scale, double t, double p, double q,
                              unsigned n, double quad_tol = 1e-8);

/// Limiting value of the bound as beta -> inf:
/// e^{-t sqrt(n)} ||ell_n^alpha||_q / ||ell_n^alpha||_p.
LogValue laguerre_limit_bound(double alpha, double t, double p, double q, unsigned n,
                              double quad_tol = 1e-8);

/// Finite certificate for the degeneration of the rescaled bounds:
/// scans n upward until the Laguerre limit value exceeds 4M, then walks
/// the beta ladder {1e2, ..., beta_cap} until the rescaled bound exceeds
/// 2M. `found` is false on cap exhaustion; `bound` is the best value seen.
struct DegenerationCertificate {
    bool found = false;
    unsigned n = 0;
    double beta0 = 0;
    LogValue bound;
};
DegenerationCertificate degeneration_certificate(double alpha, double t, double p, double q,
                                                 double M, unsigned n_cap = 100,
                                                 double beta_cap = 1e6);

}  // namespace hyplab
