#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hyplab/bernstein.hpp"
#include "hyplab/log_value.hpp"
#include "hyplab/orthopoly.hpp"
#include "hyplab/subordination.hpp"

namespace hyplab {

/// Eigenfunction lower bound for the subordinated operator norm:
/// ||S_t^f||_{p->q} >= e^{-t f(lambda_n)} ||phi_n||_q / ||phi_n||_p.
LogValue eigen_lower_bound(const PolyFamily& family, const BernsteinFn& f, double t, double p,
                           double q, unsigned n, double quad_tol = 1e-8);

/// Fitted slope of log(||phi_n||_q / ||phi_n||_p) against sqrt(lambda_n)
/// over [n_lo, n_hi]; a growing sequence of such slopes over widening
/// windows is the finite-sample signature of kappa_{p,q} = +infinity.
double rate_kappa(const PolyFamily& family, double p, double q, unsigned n_lo, unsigned n_hi,
                  double quad_tol = 1e-8);

/// F_t(z) = e^{-t f(0)} + sum_{n>=1} e^{-t f(n)} z^n / n!, summed until
/// both the next term and a Poisson-tail majorant drop below
/// tol * current value.
LogValue f_series(const BernsteinFn& f, double t, double z, double tol = 1e-12);

/// Slope of log F_t(z) in z, extrapolated from the ladder
/// z in {z0, 2 z0, 4 z0} by fitting c0 + c1 z + c2 sqrt(z); tends to
/// e^{-bt}.
double f_series_slope(const BernsteinFn& f, double t, double z0, double tol = 1e-12);

/// Normalized bilinear exponential test on the Gaussian side:
/// log of <S_t^f g_{tau1}, g_{tau2}> / (||g_{tau1}||_p ||g_{tau2}||_{q'})
///   = -(1/4) [ (p-1) tau1^2 + (q'-1) tau2^2 ] + log F_t(tau1 tau2 / 2).
LogValue bilinear_value(const BernsteinFn& f, double t, double p, double q, double tau1,
                        double tau2, double tol = 1e-12);

/// Vertex of the quadratic form (p-1)k^2 - 2 e^{-bt} k + (q'-1); the
/// canonical blow-up ray is tau1 = k* tau2.
double bilinear_vertex_ray(const BernsteinFn& f, double t, double p);

/// Exact classification of ||S_t^f||_{p->q} for the Ornstein-Uhlenbeck
/// (threshold q* = 1 + (p-1) e^{2bt}) and Laguerre
/// (q* = 1 + (p-1) e^{bt}) settings.
struct Classification {
    bool blow_up = false;
    double log_norm = 0;      // log e^{-at} = -at when bounded
    double threshold_q = 0;   // boundary value of q
    double discriminant = 0;  // e^{-2bt} - (p-1)(q'-1), > 0 in the OU blow-up branch
};
Classification classify_ou(const BernsteinFn& f, double t, double p, double q);
Classification classify_laguerre(const BernsteinFn& f, double t, double p, double q);

/// Truncated Parseval pairing for a Laguerre multiplier:
/// (1-tau1)^{-(a+1)} (1-tau2)^{-(a+1)}
///   (a_0 + sum a_n Gamma(n+a+1)/(Gamma(a+1) n!) rho^n),
/// rho = tau1 tau2 / ((1-tau1)(1-tau2)).
struct ParsevalResult {
    LogValue value;
    LogValue last_term;    // magnitude of the final retained series term
    bool diverging = false;  // terms not decaying at the truncation point
};
ParsevalResult laguerre_parseval(const std::function<double(unsigned)>& a_seq, double alpha,
                                 double p, double q, double tau1, double tau2, unsigned trunc);

double parseval_rho(double tau1, double tau2);

/// Checks the spectral-radius necessary condition
/// limsup a_n^{1/n} <= (p-1)/(q-1) along n <= n_max, and evaluates the
/// near-optimal (tau_{1,n}, tau_{2,n}) witnesses whose rho approaches
/// (q-1)/(p-1).
struct NecessaryConditionReport {
    std::vector<double> roots;                  // a_n^{1/n}
    std::optional<unsigned> first_violation;    // first n with root > threshold + margin
    double threshold = 0;                       // (p-1)/(q-1)
    double rho_limit = 0;                       // (q-1)/(p-1)
    double rho_at_nmax = 0;
    double fitted_rho_deviation_constant = 0;   // C in |rho_n/limit - 1| <= C/n
};
NecessaryConditionReport multiplier_necessary_condition(
    const std::function<double(unsigned)>& a_seq, double alpha, double p, double q,
    unsigned n_max, double margin = 1e-9);

/// Witness tau pair for degree n from the explicit choice
/// tau_{1,n} = n / (p [n + (alpha+1)(1/p + 1/q')]), and its q' analogue.
std::pair<double, double> parseval_witness_taus(double alpha, double p, double q, unsigned n);

}  // namespace hyplab
