#include "hyplab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "hyplab/special.hpp"

namespace hyplab {

Measure Measure::of(const PolyFamily& family) {
    switch (family.kind) {
        case PolyKind::Hermite:
            return gaussian();
        case PolyKind::Laguerre:
            return gamma(family.alpha);
        case PolyKind::Jacobi:
            return jacobi(family.alpha, family.beta);
        case PolyKind::Gegenbauer:
            return jacobi(family.lambda - 0.5, family.lambda - 0.5);
    }
    throw std::invalid_argument("Measure::of: unknown family");
}

void Measure::validate() const {
    switch (kind) {
        case MeasureKind::Gaussian:
            return;
        case MeasureKind::Gamma:
            if (!(alpha > -1.0)) throw std::invalid_argument("Gamma measure: alpha > -1 required");
            return;
        case MeasureKind::Jacobi:
            if (!(alpha > -1.0) || !(beta > -1.0))
                throw std::invalid_argument("Jacobi measure: alpha, beta > -1 required");
            return;
        case MeasureKind::RescaledJacobiNearOne:
            if (!(alpha > -1.0) || !(beta > 0.0) || !std::isfinite(beta))
                throw std::invalid_argument("rescaled Jacobi measure: need alpha > -1, finite beta > 0");
            return;
        case MeasureKind::RescaledSymmetricJacobi:
            if (!(lambda > 0.0) || !std::isfinite(lambda))
                throw std::invalid_argument("rescaled symmetric measure: need finite lambda > 0");
            return;
    }
    throw std::invalid_argument("Measure: unknown kind");
}

std::string Measure::name() const {
    switch (kind) {
        case MeasureKind::Gaussian:
            return "gaussian";
        case MeasureKind::Gamma:
            return "gamma(" + std::to_string(alpha) + ")";
        case MeasureKind::Jacobi:
            return "jacobi(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
        case MeasureKind::RescaledJacobiNearOne:
            return "jacobi-near-one(" + std::to_string(alpha) + ";" + std::to_string(beta) + ")";
        case MeasureKind::RescaledSymmetricJacobi:
            return "symmetric-rescaled(" + std::to_string(lambda) + ")";
    }
    return "?";
}

namespace {

// Monic three-term recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1}
// for the classical weights; b_0 is unused (total mass is 1 for the
// normalized probability measures).
void monic_recurrence(const Measure& measure, unsigned m, std::vector<double>& a,
                      std::vector<double>& b) {
    a.resize(m);
    b.assign(m, 0.0);
    switch (measure.kind) {
        case MeasureKind::Gaussian:
            for (unsigned k = 0; k < m; ++k) {
                a[k] = 0.0;
                if (k > 0) b[k] = 0.5 * k;
            }
            return;
        case MeasureKind::Gamma: {
            const double al = measure.alpha;
            for (unsigned k = 0; k < m; ++k) {
                a[k] = 2.0 * k + al + 1.0;
                if (k > 0) b[k] = k * (k + al);
            }
            return;
        }
        case MeasureKind::Jacobi: {
            const double al = measure.alpha, be = measure.beta;
            const double ab = al + be;
            // Weight (1-x)^al (1+x)^be; the textbook coefficients are for
            // (1-x)^al as the *first* factor, i.e. Jacobi convention with
            // x -> x. Monic recurrence (Gautschi):
            for (unsigned k = 0; k < m; ++k) {
                const double dk = static_cast<double>(k);
                if (k == 0) {
                    a[0] = (be - al) / (ab + 2.0);
                } else {
                    const double den = (2.0 * dk + ab) * (2.0 * dk + ab + 2.0);
                    a[k] = (be * be - al * al) / den;
                }
                if (k == 1) {
                    // cancel the (1 + ab) factor to stay finite at ab = -1
                    b[1] = 4.0 * (1.0 + al) * (1.0 + be) /
                           ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
                } else if (k >= 2) {
                    const double s = 2.0 * dk + ab;
                    b[k] = 4.0 * dk * (dk + al) * (dk + be) * (dk + ab) /
                           (s * s * (s + 1.0) * (s - 1.0));
                }
            }
            return;
        }
        default:
            throw std::logic_error("monic_recurrence: rescaled measures use mapped Jacobi rules");
    }
}

// Symmetric tridiagonal eigensolve (QL with implicit shifts) that tracks
// only the first components of the eigenvectors, which is all
// Golub-Welsch needs. d: diagonal, e: off-diagonal (e[0] unused on
// input, indexed e[1..n-1]); z starts as e_1.
void tridiag_ql_first_components(std::vector<double>& d, std::vector<double>& e,
                                 std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    z.assign(n, 0.0);
    z[0] = 1.0;
    if (n == 1) return;
    // shift offdiagonal to e[0..n-2]
    for (int i = 0; i < n - 1; ++i) e[i] = e[i + 1];
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int mm;
        do {
            for (mm = l; mm < n - 1; ++mm) {
                const double dd = std::fabs(d[mm]) + std::fabs(d[mm + 1]);
                if (std::fabs(e[mm]) <= 1e-16 * dd) break;
            }
            if (mm != l) {
                if (iter++ == 60) throw std::runtime_error("Golub-Welsch: QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[mm] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = mm - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double bb = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[mm] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * bb;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - bb;
                    // rotate the tracked first-component row
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && mm - 1 >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[mm] = 0.0;
            }
        } while (mm != l);
    }
}

QuadratureRule build_rule(const Measure& measure, unsigned m) {
    measure.validate();
    if (m == 0) throw std::invalid_argument("gauss_rule: m >= 1 required");

    if (measure.kind == MeasureKind::RescaledJacobiNearOne) {
        // push-forward of mu_{alpha,beta} under y = (beta/2)(1-x)
        QuadratureRule base = build_rule(Measure::jacobi(measure.alpha, measure.beta), m);
        QuadratureRule out = base;
        for (unsigned i = 0; i < m; ++i)
            out.nodes[i] = 0.5 * measure.beta * (1.0 - base.nodes[i]);
        std::reverse(out.nodes.begin(), out.nodes.end());
        std::reverse(out.weights.begin(), out.weights.end());
        return out;
    }
    if (measure.kind == MeasureKind::RescaledSymmetricJacobi) {
        // push-forward of mu_{l-1/2,l-1/2} under y = sqrt(l) x
        QuadratureRule base =
            build_rule(Measure::jacobi(measure.lambda - 0.5, measure.lambda - 0.5), m);
        QuadratureRule out = base;
        const double s = std::sqrt(measure.lambda);
        for (unsigned i = 0; i < m; ++i) out.nodes[i] = s * base.nodes[i];
        return out;
    }

    std::vector<double> a, b;
    monic_recurrence(measure, m, a, b);
    std::vector<double> d = a, e(m, 0.0), z;
    for (unsigned k = 1; k < m; ++k) e[k] = std::sqrt(b[k]);
    tridiag_ql_first_components(d, e, z);

    QuadratureRule rule;
    rule.nodes.resize(m);
    rule.weights.resize(m);
    std::vector<unsigned> idx(m);
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(), [&](unsigned i, unsigned j) { return d[i] < d[j]; });
    for (unsigned i = 0; i < m; ++i) {
        rule.nodes[i] = d[idx[i]];
        rule.weights[i] = z[idx[i]] * z[idx[i]];  // total mass 1
    }
    rule.exactness_degree = 2 * m - 1;
    return rule;
}

const QuadratureRule& cached_rule(const Measure& measure, unsigned m) {
    static std::map<std::pair<std::string, unsigned>, QuadratureRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    const auto key = std::make_pair(measure.name(), m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_rule(measure, m)).first;
    return it->second;
}

struct RuleSum {
    LogValue value;
    LogValue abs;  // integral of |f|, the natural convergence scale
};

RuleSum apply_rule(const QuadratureRule& rule, const std::function<LogValue(double)>& f) {
    RuleSum acc;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        if (rule.weights[i] <= 0.0) continue;
        const LogValue term = LogValue::from_log(1, std::log(rule.weights[i])) * f(rule.nodes[i]);
        acc.value += term;
        acc.abs += term.abs();
    }
    return acc;
}

}  // namespace

QuadratureRule gauss_rule(const Measure& measure, unsigned m) { return build_rule(measure, m); }

LogValue integrate(const std::function<LogValue(double)>& f, const Measure& measure,
                   const IntegrationConfig& cfg) {
    measure.validate();
    LogValue prev;
    bool have_prev = false;
    for (unsigned m = cfg.start_nodes; m <= cfg.max_nodes; m *= 2) {
        const RuleSum cur = apply_rule(cached_rule(measure, m), f);
        if (have_prev) {
            const LogValue diff = (cur.value - prev).abs();
            // converge against the |f|-integral: a cancelling integrand
            // near zero is then judged on the scale of its mass, not of
            // the vanishing result
            if (diff.is_zero() || cur.abs.is_zero() ||
                diff.logmag <= cur.abs.logmag + std::log(cfg.rel_tol))
                return cur.value;
        }
        prev = cur.value;
        have_prev = true;
    }
    throw std::runtime_error("integrate: node-doubling did not converge at cap " +
                             std::to_string(cfg.max_nodes));
}

LogValue lp_norm(const std::function<LogValue(double)>& f, double p, const Measure& measure,
                 double tol) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("lp_norm: finite p >= 1");
    IntegrationConfig cfg;
    cfg.rel_tol = tol;
    auto integrand = [&](double x) { return pow(f(x).abs(), p); };
    const LogValue ip = integrate(integrand, measure, cfg);
    if (ip.is_zero()) return ip;
    return LogValue::from_log(1, ip.logmag / p);
}

LogValue normalized_poly_lp_norm(const PolyFamily& family, unsigned n, double p, double tol) {
    const Measure mu = Measure::of(family);
    return lp_norm([&](double x) { return eval_normalized(family, n, x); }, p, mu, tol);
}

double exp_moment(const Measure& measure, double s) {
    measure.validate();
    switch (measure.kind) {
        case MeasureKind::Gaussian:
            return std::exp(0.25 * s * s);
        case MeasureKind::Gamma:
            if (s >= 1.0) throw std::domain_error("exp_moment: Gamma measure requires s < 1");
            return std::pow(1.0 - s, -(measure.alpha + 1.0));
        default: {
            auto f = [&](double x) { return log_exp(s * x); };
            return integrate(f, measure).to_double();
        }
    }
}

namespace {

// Tail of the exponential series: R_n(y) = sum_{k >= n} y^k / k!.
// For y >= 0 (and for |y| < n) the direct tail sum is stable; for
// y <= -n the tail has catastrophic cancellation and e^y - T_{n-1}(y)
// is used instead, whose partial sum is dominated by its last terms.
LogValue exp_series_tail(double y, unsigned n) {
    if (y == 0.0) return n == 0 ? LogValue::one() : LogValue::zero();
    const double ay = std::fabs(y);
    const double log_ay = std::log(ay);
    const int ysign = y > 0 ? 1 : -1;
    if (y > 0.0 || ay < n) {
        LogValue sum;
        LogValue max_seen;
        for (unsigned k = n; k < n + 100000; ++k) {
            const double lt = k * log_ay - log_gamma(k + 1.0);
            const int ts = (ysign < 0 && (k % 2 == 1)) ? -1 : 1;
            const LogValue term = LogValue::from_log(ts, lt);
            sum += term;
            if (max_seen.is_zero() || term.abs() > max_seen) max_seen = term.abs();
            if (k > n + 2 && static_cast<double>(k) > ay + 10.0 &&
                lt < max_seen.logmag - 45.0)  // ~ e^{-45} relative
                return sum;
        }
        throw std::runtime_error("exp_series_tail: no convergence");
    }
    // y <= -n: R_n = e^y - T_{n-1}(y)
    LogValue t;
    for (unsigned k = 0; k < n; ++k) {
        const int ts = (k % 2 == 1) ? -1 : 1;
        t += LogValue::from_log(ts, k * log_ay - log_gamma(k + 1.0));
    }
    return log_exp(y) - t;
}

}  // namespace

LogValue poly_exp_inner(const std::function<LogValue(double)>& poly, unsigned n, double b,
                        const Measure& measure, const IntegrationConfig& cfg) {
    auto integrand = [&](double x) { return poly(x) * exp_series_tail(b * x, n); };
    return integrate(integrand, measure, cfg);
}

}  // namespace hyplab
