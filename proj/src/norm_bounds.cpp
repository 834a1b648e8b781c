#include "hyplab/norm_bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "hyplab/quadrature.hpp"
#include "hyplab/special.hpp"

namespace hyplab {

namespace {

// tail_n(z) e^{-z} = sum_{k >= n} z^k/k! e^{-z} in long double, stable
// for all z >= 0: series near the mode, 1 - e^{-z} T_{n-1}(z) far right
// (there every subtracted summand is itself <= 1).
long double laguerre_tail_exp(long double z, unsigned n) {
    if (z <= 0.0L) return n == 0 ? expl(-z) : 0.0L;
    if (z > 2.0L * n + 60.0L) {
        long double t = 0.0L;
        for (unsigned k = 0; k < n; ++k)
            t += expl(k * logl(z) - lgammal(static_cast<long double>(k) + 1.0L) - z);
        return 1.0L - t;
    }
    long double term = expl(n * logl(z) - lgammal(static_cast<long double>(n) + 1.0L) - z);
    long double sum = term;
    for (unsigned k = n + 1; k < n + 100000; ++k) {
        term *= z / k;
        sum += term;
        if (term < sum * 1e-21L) break;
    }
    return sum;
}

long double laguerre_classical_ld(double alpha, unsigned n, long double x) {
    const long double a = alpha;
    long double prev = 1.0L;
    if (n == 0) return prev;
    long double cur = 1.0L + a - x;
    for (unsigned k = 1; k < n; ++k) {
        const long double next = ((2.0L * k + 1.0L + a - x) * cur - (k + a) * prev) / (k + 1.0L);
        prev = cur;
        cur = next;
    }
    return cur;
}

long double hermite_normalized_ld(unsigned n, long double x) {
    long double prev = 1.0L;
    if (n == 0) return prev;
    long double cur = sqrtl(2.0L) * x;
    for (unsigned k = 1; k < n; ++k) {
        const long double next =
            sqrtl(2.0L / (k + 1.0L)) * x * cur - sqrtl(k / (k + 1.0L)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// exp-series tail for signed z; the alternating far-left branch has no
// catastrophic cancellation because the partial sums are dominated by
// their last (growing) term.
long double exp_tail_ld(long double z, unsigned n) {
    if (z == 0.0L) return n == 0 ? 1.0L : 0.0L;
    const long double az = fabsl(z);
    if (z > 0.0L || az < n) {
        long double term = expl(n * logl(az) - lgammal(static_cast<long double>(n) + 1.0L));
        if (z < 0.0L && n % 2 == 1) term = -term;
        long double sum = term;
        for (unsigned k = n + 1; k < n + 100000; ++k) {
            term *= z / k;
            sum += term;
            if (k > az && fabsl(term) < fabsl(sum) * 1e-21L) break;
        }
        return sum;
    }
    long double t = 0.0L;
    long double term = 1.0L;
    for (unsigned k = 0; k < n; ++k) {
        t += term;
        term *= z / (k + 1.0L);
    }
    return expl(z) - t;
}

// <h_n, e^{bx}> on the Gaussian measure with the sub-degree Taylor
// prefix of e^{bx} removed analytically. The coefficient sits ~1e6
// below the absolute quadrature mass at n ~ 30, so doubles bottom out
// right at 1e-10 relative; the trapezoid rule on R (geometric
// convergence for analytic Gaussian-decay integrands) in long double
// leaves ~1e-13.
LogValue hermite_fourier_quadrature(unsigned n, double b, double tol) {
    const long double SQRT_PI = 1.77245385090551602729816748334114518L;
    auto g = [&](long double x) -> long double {
        return hermite_normalized_ld(n, x) * exp_tail_ld(b * x, n) * expl(-x * x) / SQRT_PI;
    };
    const long double X = 30.0L;
    auto level_sum = [&](long double h, bool odd_only) {
        long double sv = 0.0L;
        const int kmax = static_cast<int>(X / h);
        for (int k = -kmax; k <= kmax; ++k) {
            if (odd_only && k % 2 == 0) continue;
            const long double gy = g(k * h);
            if (std::isfinite(static_cast<double>(gy))) sv += gy;
        }
        return sv;
    };
    const long double eff_tol = std::max(1e-11L, static_cast<long double>(tol));
    long double h = 0.5L;
    long double est = h * level_sum(h, false);
    long double best_rel = 1e300L;
    for (int level = 0; level < 8; ++level) {
        h *= 0.5L;
        const long double refined = 0.5L * est + h * level_sum(h, true);
        if (level >= 2 && refined != 0.0L)
            best_rel = std::min(best_rel, fabsl(refined - est) / fabsl(refined));
        est = refined;
        if (best_rel <= 1e-16L) break;
    }
    if (best_rel > eff_tol)
        throw std::runtime_error("fourier_coefficient_quadrature: trapezoid did not converge");
    if (est == 0.0L) return LogValue::zero();
    return LogValue::from_log(est > 0.0L ? 1 : -1, static_cast<double>(logl(fabsl(est))));
}

// <L_n^alpha, e^{bx}> on the Gamma(alpha) measure. The growing
// exponential defeats Gauss rules near b = 1, and for small b the
// coefficient sits ~1e8 below the quadrature's absolute mass, so
// doubles bottom out near 1e-8 relative. Substituting x = y/(1-b)
// folds e^{bx} into the weight,
//   (1-b)^{-(alpha+1)} int L_n(y/(1-b)) tail_n(by/(1-b)) e^{-by/(1-b)}
//     dmu_alpha(y),
// and evaluating with exp-sinh nodes y = e^{pi sinh u} (analytic, so
// the whole pipeline runs in long double) leaves ~1e-12 relative error
// even at n = 30, b = 0.1.
LogValue laguerre_fourier_quadrature(double alpha, unsigned n, double b, double tol) {
    const long double s = 1.0L - static_cast<long double>(b);
    const long double lg = lgammal(static_cast<long double>(alpha) + 1.0L);
    auto g = [&](long double y) -> long double {
        const long double z = static_cast<long double>(b) * y / s;
        const long double dens = expl(static_cast<long double>(alpha) * logl(y) - y - lg);
        return dens * laguerre_classical_ld(alpha, n, y / s) * laguerre_tail_exp(z, n);
    };
    const long double PIL = 3.14159265358979323846264338327950288L;
    const long double U = 6.0L;
    auto level_sum = [&](long double h, bool odd_only) {
        long double sv = 0.0L;
        const int kmax = static_cast<int>(U / h);
        for (int k = -kmax; k <= kmax; ++k) {
            if (odd_only && k % 2 == 0) continue;
            const long double u = k * h;
            const long double y = expl(PIL * sinhl(u));
            const long double w = PIL * coshl(u) * y;
            if (y == 0.0L || !std::isfinite(static_cast<double>(w))) continue;
            const long double gy = g(y);
            if (gy == 0.0L || !std::isfinite(static_cast<double>(gy))) continue;
            sv += w * gy;
        }
        return sv;
    };
    // level diffs plateau at the long-double cancellation floor
    // (~1e-12 relative at n = 30, b = 0.1), so certify the best
    // successive agreement instead of demanding machine convergence
    const long double eff_tol = std::max(1e-11L, static_cast<long double>(tol));
    long double h = 0.25L;
    long double est = h * level_sum(h, false);
    long double best_rel = 1e300L;
    for (int level = 0; level < 8; ++level) {
        h *= 0.5L;
        const long double refined = 0.5L * est + h * level_sum(h, true);
        if (level >= 2 && refined != 0.0L)
            best_rel = std::min(best_rel, fabsl(refined - est) / fabsl(refined));
        est = refined;
        if (best_rel <= 1e-16L) break;
    }
    if (best_rel > eff_tol)
        throw std::runtime_error("fourier_coefficient_quadrature: exp-sinh did not converge");
    const long double scaled = est * expl(-(static_cast<long double>(alpha) + 1.0L) * logl(s));
    if (scaled == 0.0L) return LogValue::zero();
    return LogValue::from_log(scaled > 0.0L ? 1 : -1,
                              static_cast<double>(logl(fabsl(scaled))));
}

}  // namespace

HermiteBounds hermite_bounds(unsigned n, double q) {
    if (n < 1) throw std::invalid_argument("hermite_bounds: n >= 1 required");
    if (!(q > 2.0)) throw std::domain_error("hermite_bounds: q > 2 required");
    const double dn = static_cast<double>(n);
    const double log_upper = 0.5 * dn * std::log(q - 1.0);
    const double log_lower =
        log_upper - 0.25 * std::log(2.0 * M_PI * dn) - 1.0 / (24.0 * dn);
    return {LogValue::from_log(1, log_lower), LogValue::from_log(1, log_upper)};
}

NormBoundReport hermite_sandwich(unsigned n, double q, double quad_tol, double slack) {
    const HermiteBounds b = hermite_bounds(n, q);
    const LogValue measured = normalized_poly_lp_norm(PolyFamily::hermite(), n, q, quad_tol);
    const double log_slack = std::log1p(slack);
    const bool ok = measured.logmag + log_slack >= b.lower.logmag &&
                    measured.logmag - log_slack <= b.upper.logmag;
    return {n, q, measured, b.lower, b.upper, ok};
}

LogValue laguerre_lower(unsigned n, double alpha, double q, double rho) {
    if (!(alpha > -1.0)) throw std::invalid_argument("laguerre_lower: alpha > -1");
    if (!(q > 2.0)) throw std::domain_error("laguerre_lower: q > 2 required");
    if (!(rho > 0.0 && rho < q - 1.0))
        throw std::domain_error("laguerre_lower: rho in (0, q-1) required");
    const double qp = q / (q - 1.0);
    const double b = rho / (1.0 + rho);  // < 1/q' since rho < q-1
    const double dn = static_cast<double>(n);
    const double logv = (alpha + 1.0) / qp * std::log(1.0 - qp * b) -
                        (alpha + 1.0) * std::log(1.0 - b) +
                        0.5 * (log_gamma(dn + alpha + 1.0) - log_gamma(alpha + 1.0) -
                               log_gamma(dn + 1.0)) +
                        dn * std::log(b / (1.0 - b));
    return LogValue::from_log(1, logv);
}

LogValue laguerre_upper(unsigned n, double alpha, double q) {
    if (!(alpha >= -0.5))
        throw std::domain_error("laguerre_upper: bound only claimed for alpha >= -1/2");
    if (!(q > 2.0)) throw std::domain_error("laguerre_upper: q > 2 required");
    return LogValue::from_log(1, n * std::log(q - 1.0));
}

LogValue fourier_coefficient(const PolyFamily& family, unsigned n, double b) {
    family.validate();
    const double dn = static_cast<double>(n);
    switch (family.kind) {
        case PolyKind::Hermite: {
            if (b == 0.0) return n == 0 ? LogValue::one() : LogValue::zero();
            const double logv = dn * std::log(std::fabs(b)) -
                                0.5 * (dn * std::log(2.0) + log_gamma(dn + 1.0)) +
                                0.25 * b * b;
            const int sign = (b < 0.0 && n % 2 == 1) ? -1 : 1;
            return LogValue::from_log(sign, logv);
        }
        case PolyKind::Laguerre: {
            if (!(b > 0.0 && b < 1.0))
                throw std::domain_error("fourier_coefficient: Laguerre requires 0 < b < 1");
            const double logv = log_gamma(dn + family.alpha + 1.0) -
                                log_gamma(family.alpha + 1.0) - log_gamma(dn + 1.0) +
                                dn * std::log(b) - (dn + family.alpha + 1.0) * std::log(1.0 - b);
            return LogValue::from_log(n % 2 == 0 ? 1 : -1, logv);
        }
        default:
            throw std::invalid_argument("fourier_coefficient: Hermite or Laguerre only");
    }
}

LogValue laguerre_normalized_fourier_coefficient(double alpha, unsigned n, double b) {
    if (!(b > 0.0 && b < 1.0))
        throw std::domain_error("laguerre_normalized_fourier_coefficient: 0 < b < 1");
    const double dn = static_cast<double>(n);
    const double logv =
        -(alpha + 1.0) * std::log(1.0 - b) +
        0.5 * (log_gamma(dn + alpha + 1.0) - log_gamma(alpha + 1.0) - log_gamma(dn + 1.0)) +
        dn * std::log(b / (1.0 - b));
    return LogValue::from_log(n % 2 == 0 ? 1 : -1, logv);
}

LogValue fourier_coefficient_quadrature(const PolyFamily& family, unsigned n, double b,
                                        double tol) {
    if (family.kind == PolyKind::Hermite) return hermite_fourier_quadrature(n, b, tol);
    if (family.kind != PolyKind::Laguerre)
        throw std::invalid_argument("fourier_coefficient_quadrature: Hermite or Laguerre only");
    if (!(b > 0.0 && b < 1.0))
        throw std::domain_error("fourier_coefficient_quadrature: Laguerre requires 0 < b < 1");
    return laguerre_fourier_quadrature(family.alpha, n, b, tol);
}

double growth_rate(const PolyFamily& family, double p, double q, unsigned n_lo, unsigned n_hi,
                   double quad_tol) {
    if (n_hi < n_lo + 4 || n_lo < 10)
        throw std::invalid_argument("growth_rate: window of >= 5 degrees, all >= 10");
    std::vector<double> xs, ys;
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        const LogValue nq = normalized_poly_lp_norm(family, n, q, quad_tol);
        const LogValue np = (p == 2.0) ? LogValue::one()
                                       : normalized_poly_lp_norm(family, n, p, quad_tol);
        xs.push_back(static_cast<double>(n));
        ys.push_back(nq.logmag - np.logmag);
    }
    return fit_slope(xs, ys);
}

}  // namespace hyplab
