#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyplab/bernstein.hpp"
#include "hyplab/orthopoly.hpp"

namespace hyplab {

/// Spectral multiplier phi_n -> a_n phi_n on a polynomial family.
struct MultiplierSequence {
    PolyFamily family;
    std::function<double(unsigned)> a;
    std::string description;
};

/// Multiplier of the subordinated semigroup: a_n = e^{-t f(lambda_n)}.
MultiplierSequence subordinated_multiplier(const BernsteinFn& f, double t,
                                           const PolyFamily& family);

/// Residual of the Poisson subordination kernel identity
/// (2 sqrt(pi))^{-1} integral of t s^{-3/2} e^{-t^2/(4s)} e^{-lambda s} ds
///   = e^{-t sqrt(lambda)},
/// computed by tanh-sinh quadrature after the substitution u = t^2/(4s).
double poisson_kernel_identity(double t, double lam, double tol = 1e-12);

/// Truncated Jacobi heat kernel
/// G_s(x, y) = sum of e^{-s lambda_n} j_n(x) j_n(y), with the dropped
/// tail certified below tail_rel_bound of the retained value through the
/// endpoint sup bounds of the normalized polynomials.
struct HeatKernelResult {
    double value = 0;
    unsigned terms = 0;
    double tail_bound = 0;  // absolute bound on the dropped tail
};
HeatKernelResult jacobi_heat_kernel(double alpha, double beta, double s, double x, double y,
                                    double tail_rel_bound = 1e-12, unsigned n_cap = 20000);

/// Grid estimate of ||e^{s L_{alpha,beta}}||_{1->inf} = sup G_s:
/// max over a Chebyshev-spaced grid including endpoints, with extra
/// refinement near the corner favored by the larger parameter.
struct UltraEstimate {
    double value = 0;
    double arg_x = 0, arg_y = 0;
    unsigned grid = 0;
};
UltraEstimate ultra_norm_estimate(double alpha, double beta, double s, unsigned grid = 33);

/// Majorant integral from the Poisson-subordination ultracontractivity
/// argument: with ||T_s|| <= (1 ^ s)^{-sigma/2},
///   (2 sqrt(pi))^{-1} [ integral_0^1 t s^{-(sigma+3)/2} e^{-t^2/4s} ds
///                     + integral_1^inf t s^{-3/2} e^{-t^2/4s} ds ],
/// both pieces in closed incomplete-Gamma form via u = t^2/(4s).
double poisson_ultra_bound(double sigma, double t);

}  // namespace hyplab
