#include "hyplab/obstruction.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hyplab/quadrature.hpp"
#include "hyplab/special.hpp"

namespace hyplab {

namespace {

void check_pq(double p, double q) {
    if (!(p > 1.0) || !(q > p) || !std::isfinite(q))
        throw std::invalid_argument("require 1 < p < q < inf");
}

double conjugate(double r) { return r / (r - 1.0); }

}  // namespace

LogValue eigen_lower_bound(const PolyFamily& family, const BernsteinFn& f, double t, double p,
                           double q, unsigned n, double quad_tol) {
    check_pq(p, q);
    if (!(t > 0.0)) throw std::invalid_argument("eigen_lower_bound: t > 0");
    const double lam = family.eigenvalue(n);
    if (n == 0) return log_exp(-t * f(0.0));  // phi_0 = 1 on a probability measure
    const LogValue nq = normalized_poly_lp_norm(family, n, q, quad_tol);
    const LogValue np = normalized_poly_lp_norm(family, n, p, quad_tol);
    return log_exp(-t * f(lam)) * nq / np;
}

double rate_kappa(const PolyFamily& family, double p, double q, unsigned n_lo, unsigned n_hi,
                  double quad_tol) {
    if (n_hi < n_lo + 4 || n_lo < 10)
        throw std::invalid_argument("rate_kappa: window of >= 5 degrees, all >= 10");
    if (p == q) return 0.0;
    std::vector<double> xs, ys;
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        const LogValue nq = normalized_poly_lp_norm(family, n, q, quad_tol);
        const LogValue np = (p == 2.0) ? LogValue::one()
                                       : normalized_poly_lp_norm(family, n, p, quad_tol);
        xs.push_back(std::sqrt(family.eigenvalue(n)));
        ys.push_back(nq.logmag - np.logmag);
    }
    return fit_slope(xs, ys);
}

LogValue f_series(const BernsteinFn& f, double t, double z, double tol) {
    if (!(t > 0.0) || z < 0.0) throw std::invalid_argument("f_series: t > 0, z >= 0");
    LogValue sum = log_exp(-t * f(0.0));
    if (z == 0.0) return sum;
    const double logz = std::log(z);
    for (unsigned n = 1; n < 10000000; ++n) {
        const double lt = -t * f(static_cast<double>(n)) + n * logz - log_gamma(n + 1.0);
        const LogValue term = LogValue::from_log(1, lt);
        sum += term;
        if (static_cast<double>(n) > z) {
            // Poisson tail majorant: e^{-tf} <= 1 termwise, and
            // sum_{m>n} z^m/m! <= (z^{n+1}/(n+1)!) / (1 - z/(n+2))
            const double log_tail = (n + 1.0) * logz - log_gamma(n + 2.0) -
                                    std::log1p(-z / (n + 2.0));
            if (term.logmag < std::log(tol) + sum.logmag &&
                log_tail < std::log(tol) + sum.logmag)
                return sum;
        }
    }
    throw std::runtime_error("f_series: series did not settle");
}

double f_series_slope(const BernsteinFn& f, double t, double z0, double tol) {
    if (!(z0 > 0.0)) throw std::invalid_argument("f_series_slope: z0 > 0");
    // fit log F = c0 + c1 z + c2 sqrt(z) through the three ladder points
    const double z1 = z0, z2 = 2.0 * z0, z3 = 4.0 * z0;
    const double y1 = f_series(f, t, z1, tol).logmag;
    const double y2 = f_series(f, t, z2, tol).logmag;
    const double y3 = f_series(f, t, z3, tol).logmag;
    const double s1 = std::sqrt(z1), s2 = std::sqrt(z2), s3 = std::sqrt(z3);
    // solve the 3x3 Vandermonde-like system by elimination
    const double d21 = (y2 - y1), d32 = (y3 - y2);
    const double a21 = (z2 - z1), a32 = (z3 - z2);
    const double b21 = (s2 - s1), b32 = (s3 - s2);
    // d21 = c1 a21 + c2 b21 ; d32 = c1 a32 + c2 b32
    const double det = a21 * b32 - a32 * b21;
    return (d21 * b32 - d32 * b21) / det;
}

LogValue bilinear_value(const BernsteinFn& f, double t, double p, double q, double tau1,
                        double tau2, double tol) {
    if (!(p > 1.0) || !(q > 1.0) || !std::isfinite(p) || !std::isfinite(q))
        throw std::invalid_argument("bilinear_value: 1 < p, q < inf");
    if (!(tau1 > 0.0) || !(tau2 > 0.0))
        throw std::invalid_argument("bilinear_value: tau1, tau2 > 0");
    const double qp = conjugate(q);
    const LogValue F = f_series(f, t, 0.5 * tau1 * tau2, tol);
    const double logv =
        -0.25 * ((p - 1.0) * tau1 * tau1 + (qp - 1.0) * tau2 * tau2) + F.logmag;
    return LogValue::from_log(1, logv);
}

double bilinear_vertex_ray(const BernsteinFn& f, double t, double p) {
    if (!(p > 1.0) || !(t > 0.0)) throw std::invalid_argument("bilinear_vertex_ray: p > 1, t > 0");
    return std::exp(-f.drift() * t) / (p - 1.0);
}

namespace {

Classification classify_threshold(const BernsteinFn& f, double t, double p, double q,
                                  double rate) {
    // q <= p is trivially bounded (contraction + norm decay), so the
    // classification accepts it; only q > p engages the threshold
    if (!(p > 1.0) || !(q >= p) || !std::isfinite(q))
        throw std::invalid_argument("classify: require 1 < p <= q < inf");
    if (!(t > 0.0)) throw std::invalid_argument("classify: t > 0 required");
    Classification c;
    c.threshold_q = 1.0 + (p - 1.0) * std::exp(rate * f.drift() * t);
    c.blow_up = q > c.threshold_q;
    c.log_norm = c.blow_up ? std::numeric_limits<double>::infinity() : -f.killing() * t;
    const double qp = conjugate(q);
    c.discriminant = std::exp(-2.0 * f.drift() * t) - (p - 1.0) * (qp - 1.0);
    return c;
}

}  // namespace

Classification classify_ou(const BernsteinFn& f, double t, double p, double q) {
    return classify_threshold(f, t, p, q, 2.0);
}

Classification classify_laguerre(const BernsteinFn& f, double t, double p, double q) {
    return classify_threshold(f, t, p, q, 1.0);
}

double parseval_rho(double tau1, double tau2) {
    return tau1 * tau2 / ((1.0 - tau1) * (1.0 - tau2));
}

ParsevalResult laguerre_parseval(const std::function<double(unsigned)>& a_seq, double alpha,
                                 double p, double q, double tau1, double tau2, unsigned trunc) {
    if (!(alpha > -1.0)) throw std::invalid_argument("laguerre_parseval: alpha > -1");
    const double qp = conjugate(q);
    if (!(tau1 > 0.0 && tau1 < 1.0 / p) || !(tau2 > 0.0 && tau2 < 1.0 / qp))
        throw std::domain_error("laguerre_parseval: need tau1 in (0,1/p), tau2 in (0,1/q')");
    if (trunc < 2) throw std::invalid_argument("laguerre_parseval: trunc >= 2");
    const double log_rho = std::log(parseval_rho(tau1, tau2));
    const double log_prefactor =
        -(alpha + 1.0) * (std::log(1.0 - tau1) + std::log(1.0 - tau2));

    LogValue series;
    LogValue prev_term, last_term;
    bool diverging = false;
    for (unsigned n = 0; n <= trunc; ++n) {
        const double an = a_seq(n);
        if (an < 0.0) throw std::invalid_argument("laguerre_parseval: a_n >= 0 required");
        const double lw = log_gamma(n + alpha + 1.0) - log_gamma(alpha + 1.0) -
                          log_gamma(n + 1.0) + n * log_rho;
        const LogValue term = LogValue::from_double(an) * LogValue::from_log(1, lw);
        series += term;
        if (n == trunc && !term.is_zero() && !prev_term.is_zero() &&
            term.logmag >= prev_term.logmag)
            diverging = true;
        prev_term = term;
        if (!term.is_zero()) last_term = term;
    }
    ParsevalResult r;
    r.value = LogValue::from_log(1, log_prefactor) * series;
    r.last_term = last_term;
    r.diverging = diverging;
    return r;
}

std::pair<double, double> parseval_witness_taus(double alpha, double p, double q, unsigned n) {
    const double qp = conjugate(q);
    const double shift = (alpha + 1.0) * (1.0 / p + 1.0 / qp);
    const double dn = static_cast<double>(n);
    return {dn / (p * (dn + shift)), dn / (qp * (dn + shift))};
}

NecessaryConditionReport multiplier_necessary_condition(
    const std::function<double(unsigned)>& a_seq, double alpha, double p, double q,
    unsigned n_max, double margin) {
    check_pq(p, q);
    if (n_max < 10) throw std::invalid_argument("multiplier_necessary_condition: n_max >= 10");
    NecessaryConditionReport rep;
    rep.threshold = (p - 1.0) / (q - 1.0);
    rep.rho_limit = (q - 1.0) / (p - 1.0);
    for (unsigned n = 1; n <= n_max; ++n) {
        const double root = std::pow(a_seq(n), 1.0 / static_cast<double>(n));
        rep.roots.push_back(root);
        if (!rep.first_violation && root > rep.threshold + margin) rep.first_violation = n;
    }
    // witness-rho convergence: rho_n = limit (1 + O(1/n)); fit the 1/n
    // constant from the sampled deviations
    double cmax = 0.0;
    for (unsigned n = 10; n <= n_max; n += std::max(1u, n_max / 20)) {
        const auto [t1, t2] = parseval_witness_taus(alpha, p, q, n);
        const double rho = parseval_rho(t1, t2);
        cmax = std::max(cmax, std::fabs(rho / rep.rho_limit - 1.0) * n);
    }
    {
        const auto [t1, t2] = parseval_witness_taus(alpha, p, q, n_max);
        rep.rho_at_nmax = parseval_rho(t1, t2);
    }
    rep.fitted_rho_deviation_constant = cmax;
    return rep;
}

}  // namespace hyplab
