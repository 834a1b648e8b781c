#pragma once

#include <vector>

#include "hyplab/log_value.hpp"
#include "hyplab/orthopoly.hpp"

namespace hyplab {

struct NormBoundReport {
    unsigned n = 0;
    double q = 0;
    LogValue measured;
    LogValue lower;
    LogValue upper;
    bool passed = false;
};

/// Two-sided bound for ||h_n||_{L^q(gamma_1)}, q > 2:
/// (q-1)^{n/2} (2 pi n)^{-1/4} e^{-1/(24n)}  <=  ||h_n||_q  <=  (q-1)^{n/2}.
struct HermiteBounds {
    LogValue lower;
    LogValue upper;
};
HermiteBounds hermite_bounds(unsigned n, double q);

/// Measure ||h_n||_q by quadrature and check it against hermite_bounds,
/// with relative slack on the measured value.
NormBoundReport hermite_sandwich(unsigned n, double q, double quad_tol = 1e-8,
                                 double slack = 1e-8);

/// Explicit lower bound for ||ell_n^alpha||_{L^q(mu_alpha)} with
/// rho in (0, q-1), in the exact pre-Stirling form
/// (1 - q'b)^{(alpha+1)/q'} (1-b)^{-(alpha+1)}
///   (Gamma(n+alpha+1)/(Gamma(alpha+1) n!))^{1/2} (b/(1-b))^n,  b = rho/(1+rho).
LogValue laguerre_lower(unsigned n, double alpha, double q, double rho);

/// Hypercontractive upper bound (q-1)^n, valid for alpha >= -1/2, q > 2.
LogValue laguerre_upper(unsigned n, double alpha, double q);

/// Signed coefficient <phi_n, e^{b .}> against the invariant measure:
/// for Hermite (normalized h_n):  b^n (2^n n!)^{-1/2} e^{b^2/4};
/// for Laguerre (classical L_n^alpha, 0 < b < 1):
///   (-1)^n Gamma(n+alpha+1)/(Gamma(alpha+1) n!) b^n (1-b)^{-(n+alpha+1)}.
LogValue fourier_coefficient(const PolyFamily& family, unsigned n, double b);

/// Same coefficient for the *normalized* Laguerre polynomial ell_n^alpha:
/// (-1)^n (1-b)^{-(alpha+1)} (Gamma(n+alpha+1)/(Gamma(alpha+1) n!))^{1/2} (b/(1-b))^n.
LogValue laguerre_normalized_fourier_coefficient(double alpha, unsigned n, double b);

/// Quadrature oracle for the same inner product.
LogValue fourier_coefficient_quadrature(const PolyFamily& family, unsigned n, double b,
                                        double tol = 1e-12);

/// Least-squares slope of n -> log(||phi_n||_q / ||phi_n||_p) over the
/// window [n_lo, n_hi]. Hermite slope tends to (1/2) log((q-1)/(p-1)),
/// Laguerre (alpha >= -1/2) to log((q-1)/(p-1)).
double growth_rate(const PolyFamily& family, double p, double q, unsigned n_lo, unsigned n_hi,
                   double quad_tol = 1e-8);

}  // namespace hyplab
