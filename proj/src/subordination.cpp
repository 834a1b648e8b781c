#include "hyplab/subordination.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyplab/quadrature.hpp"
#include "hyplab/special.hpp"

namespace hyplab {

MultiplierSequence subordinated_multiplier(const BernsteinFn& f, double t,
                                           const PolyFamily& family) {
    if (!(t > 0.0)) throw std::invalid_argument("subordinated_multiplier: t > 0 required");
    family.validate();
    MultiplierSequence seq;
    seq.family = family;
    seq.a = [f, t, family](unsigned n) { return std::exp(-t * f(family.eigenvalue(n))); };
    seq.description = "exp(-t f(lambda_n)), t = " + std::to_string(t);
    return seq;
}

double poisson_kernel_identity(double t, double lam, double tol) {
    if (!(t > 0.0) || lam < 0.0)
        throw std::invalid_argument("poisson_kernel_identity: t > 0, lambda >= 0");
    // u = t^2/(4s), then u = v^2, turns the subordination integral into
    //   (2/sqrt(pi)) int_0^inf e^{-v^2 - c/v^2} dv,  c = lambda t^2 / 4.
    // Gauss-Hermite stalls near 1e-6 when c is small (the flat
    // essential zero at v = 0 defeats polynomial nodes); tanh-sinh on
    // (0, 1) under v = x/(1-x) resolves both endpoints to machine
    // precision.
    const double c = lam * t * t / 4.0;
    const double quad = integrate_unit_ts(
        [&](double x) {
            const double v = x / (1.0 - x);
            if (v <= 0.0) return 0.0;
            const double j = 1.0 / ((1.0 - x) * (1.0 - x));
            return 2.0 / std::sqrt(M_PI) * std::exp(-v * v - c / (v * v)) * j;
        },
        tol);
    return std::fabs(quad - std::exp(-t * std::sqrt(lam)));
}

namespace {

// log of the endpoint sup of |j_n| on [-1, 1]; for alpha, beta >= -1/2
// the maximum of the normalized Jacobi polynomial sits at an endpoint.
double log_jacobi_endpoint_sup(double alpha, double beta, unsigned n) {
    const PolyFamily fam = PolyFamily::jacobi(alpha, beta);
    const double dn = static_cast<double>(n);
    const double at_one = log_gamma(dn + alpha + 1.0) - log_gamma(alpha + 1.0) -
                          log_gamma(dn + 1.0);  // log J_n(1)
    const double at_minus_one = log_gamma(dn + beta + 1.0) - log_gamma(beta + 1.0) -
                                log_gamma(dn + 1.0);  // log |J_n(-1)|
    return std::max(at_one, at_minus_one) - log_classical_l2_norm(fam, n);
}

// Values j_0(x) .. j_N(x) by the classical recurrence in doubles (the
// normalized values stay polynomially bounded on [-1, 1] for
// alpha, beta >= -1/2).
std::vector<double> normalized_jacobi_sequence(double alpha, double beta, double x, unsigned N) {
    const PolyFamily fam = PolyFamily::jacobi(alpha, beta);
    std::vector<double> out(N + 1);
    const double ab = alpha + beta;
    double prev = 1.0;
    double cur = 0.5 * ((ab + 2.0) * x + (alpha - beta));
    out[0] = 1.0;
    if (N >= 1) out[1] = cur * std::exp(-log_classical_l2_norm(fam, 1));
    for (unsigned k = 2; k <= N; ++k) {
        const double m = static_cast<double>(k);
        const double c0 = 2.0 * m * (m + ab) * (2.0 * m + ab - 2.0);
        const double c1 = (2.0 * m + ab - 1.0) * (2.0 * m + ab) * (2.0 * m + ab - 2.0);
        const double c2 = (2.0 * m + ab - 1.0) * (alpha * alpha - beta * beta);
        const double c3 = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * (2.0 * m + ab);
        const double next = ((c1 * x + c2) * cur - c3 * prev) / c0;
        prev = cur;
        cur = next;
        out[k] = cur * std::exp(-log_classical_l2_norm(fam, k));
    }
    return out;
}

// Smallest N with certified relative series tail, plus the absolute
// tail bound sum.
struct Truncation {
    unsigned N;
    double tail_bound;
};

Truncation heat_kernel_truncation(double alpha, double beta, double s, double tail_rel_bound,
                                  unsigned n_cap) {
    // retained value is at least ~1 in relative terms once n = 0 is in;
    // certify against the running bound-sum of retained terms.
    double retained_bound = 1.0;
    for (unsigned n = 1; n <= n_cap; ++n) {
        const PolyFamily fam = PolyFamily::jacobi(alpha, beta);
        const double lt = -s * fam.eigenvalue(n) + 2.0 * log_jacobi_endpoint_sup(alpha, beta, n);
        const double term = std::exp(lt);
        if (term < tail_rel_bound * std::max(retained_bound, 1.0)) {
            // sum the remaining bound terms; they decay like e^{-s n^2}
            double tail = 0.0;
            for (unsigned m = n; m <= n_cap; ++m) {
                const double t2 =
                    std::exp(-s * fam.eigenvalue(m) + 2.0 * log_jacobi_endpoint_sup(alpha, beta, m));
                tail += t2;
                if (t2 < 1e-3 * tail || t2 == 0.0) break;
            }
            return {n - 1, tail};
        }
        retained_bound += term;
    }
    throw std::runtime_error(
        "jacobi_heat_kernel: s too small for the truncation cap; required N exceeds " +
        std::to_string(n_cap));
}

}  // namespace

HeatKernelResult jacobi_heat_kernel(double alpha, double beta, double s, double x, double y,
                                    double tail_rel_bound, unsigned n_cap) {
    if (!(alpha >= -0.5) || !(beta >= -0.5))
        throw std::invalid_argument("jacobi_heat_kernel: alpha, beta >= -1/2 required");
    if (!(s > 0.0)) throw std::invalid_argument("jacobi_heat_kernel: s > 0 required");
    if (x < -1.0 || x > 1.0 || y < -1.0 || y > 1.0)
        throw std::domain_error("jacobi_heat_kernel: x, y in [-1, 1]");
    const PolyFamily fam = PolyFamily::jacobi(alpha, beta);
    const Truncation tr = heat_kernel_truncation(alpha, beta, s, tail_rel_bound, n_cap);
    const std::vector<double> jx = normalized_jacobi_sequence(alpha, beta, x, tr.N);
    const std::vector<double> jy =
        (y == x) ? jx : normalized_jacobi_sequence(alpha, beta, y, tr.N);
    double sum = 0.0;
    for (unsigned n = 0; n <= tr.N; ++n)
        sum += std::exp(-s * fam.eigenvalue(n)) * jx[n] * jy[n];
    return {sum, tr.N + 1, tr.tail_bound};
}

UltraEstimate ultra_norm_estimate(double alpha, double beta, double s, unsigned grid) {
    if (!(alpha >= -0.5) || !(beta >= -0.5))
        throw std::invalid_argument("ultra_norm_estimate: alpha, beta >= -1/2 required");
    if (!(s > 0.0) || grid < 3)
        throw std::invalid_argument("ultra_norm_estimate: s > 0 and grid >= 3");

    std::vector<double> pts;
    for (unsigned i = 0; i < grid; ++i)
        pts.push_back(std::cos(M_PI * static_cast<double>(i) / (grid - 1)));
    // refinement near the corner favored by the larger parameter (the
    // kernel peaks where the weight degenerates)
    const double corner = (alpha >= beta) ? 1.0 : -1.0;
    for (int k = 1; k <= 6; ++k) pts.push_back(corner * (1.0 - std::pow(10.0, -k)));

    const PolyFamily fam = PolyFamily::jacobi(alpha, beta);
    const Truncation tr = heat_kernel_truncation(alpha, beta, s, 1e-10, 20000);
    std::vector<std::vector<double>> jvals;
    jvals.reserve(pts.size());
    for (double x : pts) jvals.push_back(normalized_jacobi_sequence(alpha, beta, x, tr.N));
    std::vector<double> decay(tr.N + 1);
    for (unsigned n = 0; n <= tr.N; ++n) decay[n] = std::exp(-s * fam.eigenvalue(n));

    UltraEstimate best;
    best.grid = grid;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i; j < pts.size(); ++j) {
            double v = 0.0;
            for (unsigned n = 0; n <= tr.N; ++n) v += decay[n] * jvals[i][n] * jvals[j][n];
            if (v > best.value) {
                best.value = v;
                best.arg_x = pts[i];
                best.arg_y = pts[j];
            }
        }
    }
    return best;
}

double poisson_ultra_bound(double sigma, double t) {
    if (!(sigma > 0.0) || !(t > 0.0))
        throw std::invalid_argument("poisson_ultra_bound: sigma, t > 0");
    const double u0 = t * t / 4.0;
    const double piece_small_s = 0.5 / std::sqrt(M_PI) * std::pow(4.0, 0.5 * (sigma + 1.0)) *
                                 std::pow(t, -sigma) *
                                 upper_incomplete_gamma(0.5 * (sigma + 1.0), u0);
    const double piece_large_s = lower_incomplete_gamma(0.5, u0) / std::sqrt(M_PI);
    return piece_small_s + piece_large_s;
}

}  // namespace hyplab
