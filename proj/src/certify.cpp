#include "hyplab/certify.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "hyplab/bernstein.hpp"
#include "hyplab/limit_transition.hpp"
#include "hyplab/norm_bounds.hpp"
#include "hyplab/obstruction.hpp"
#include "hyplab/orthopoly.hpp"
#include "hyplab/poincare.hpp"
#include "hyplab/quadrature.hpp"
#include "hyplab/subordination.hpp"

namespace hyplab {

namespace {

bool check_sandwich() {
    for (unsigned n = 1; n <= 60; ++n)
        for (double q : {3.0, 4.0, 6.0})
            if (!hermite_sandwich(n, q).passed) return false;
    return true;
}

bool check_rates(std::string& detail) {
    const double herm = growth_rate(PolyFamily::hermite(), 2, 4, 30, 60);
    const double lag = growth_rate(PolyFamily::laguerre(0), 2, 4, 30, 60);
    const double h0 = 0.5 * std::log(3.0), l0 = std::log(3.0);
    detail = "hermite slope " + std::to_string(herm) + " vs " + std::to_string(h0) +
             ", laguerre " + std::to_string(lag) + " vs " + std::to_string(l0);
    return std::fabs(herm / h0 - 1.0) < 0.05 && std::fabs(lag / l0 - 1.0) < 0.10;
}

bool fourier_match(const PolyFamily& fam, unsigned n, double b) {
    const LogValue cf = fourier_coefficient(fam, n, b);
    const LogValue qd = fourier_coefficient_quadrature(fam, n, b);
    return cf.sign == qd.sign && std::fabs(std::expm1(qd.logmag - cf.logmag)) <= 1e-10;
}

bool check_fourier() {
    for (unsigned n = 0; n <= 30; ++n) {
        for (double b : {0.1, 0.5, 1.0, 3.0})
            if (!fourier_match(PolyFamily::hermite(), n, b)) return false;
        for (double b : {0.1, 0.5, 0.9})
            if (!fourier_match(PolyFamily::laguerre(0), n, b)) return false;
    }
    return true;
}

bool check_poisson_kernel() {
    for (double t : {0.25, 0.5, 1.0, 2.0, 4.0})
        for (double lam : {0.5, 1.0, 2.0, 4.0, 8.0})
            if (poisson_kernel_identity(t, lam) >= 1e-8) return false;
    return true;
}

bool check_blowup(std::string& detail) {
    const BernsteinFn f = BernsteinFn::stable(0.5);
    double best30 = -1e300, best60 = -1e300;
    for (unsigned n = 1; n <= 60; ++n) {
        const double lv = eigen_lower_bound(PolyFamily::hermite(), f, 1.0, 2, 4, n).logmag;
        if (n <= 30) best30 = std::max(best30, lv);
        best60 = std::max(best60, lv);
    }
    detail = "max log bound " + std::to_string(best30) + " (n<=30), " +
             std::to_string(best60) + " (n<=60)";
    return best30 > std::log(1e3) && best60 > std::log(1e6);
}

bool check_classification() {
    struct Pt {
        double p, q, b, t;
    };
    std::vector<Pt> grid;
    for (double p : {1.5, 2.0, 3.0})
        for (double b : {0.25, 0.5})
            for (double t : {0.5, 1.0}) grid.push_back({p, 1.0 + (p - 1.0) * 2.0, b, t});
    grid.push_back({2.0, 1.0 + std::exp(1.0), 0.5, 1.0});  // OU boundary
    grid.push_back({2.0, 1.0 + std::exp(0.5), 0.5, 1.0});  // Laguerre boundary
    grid.push_back({1.5, 6.0, 0.25, 2.0});
    grid.push_back({3.0, 3.5, 0.5, 0.5});
    grid.push_back({2.0, 8.0, 0.5, 1.0});
    grid.push_back({2.0, 2.5, 1.0, 1.0});
    grid.push_back({4.0, 16.0, 0.25, 1.0});
    grid.push_back({1.2, 1.3, 0.5, 2.0});
    if (grid.size() < 20) return false;
    const double a = 0.3;
    for (const Pt& g : grid) {
        const BernsteinFn f(a, g.b);
        const Classification ou = classify_ou(f, g.t, g.p, g.q);
        const bool ou_expected = g.q > 1.0 + (g.p - 1.0) * std::exp(2.0 * g.b * g.t);
        if (ou.blow_up != ou_expected) return false;
        if (!ou_expected && std::fabs(ou.log_norm + a * g.t) > 1e-14) return false;
        if (ou_expected && !std::isinf(ou.log_norm)) return false;
        const Classification lg = classify_laguerre(f, g.t, g.p, g.q);
        const bool lg_expected = g.q > 1.0 + (g.p - 1.0) * std::exp(g.b * g.t);
        if (lg.blow_up != lg_expected) return false;
        if (!lg_expected && std::fabs(lg.log_norm + a * g.t) > 1e-14) return false;
    }
    return true;
}

bool check_bilinear(std::string& detail) {
    const BernsteinFn f(0, 0.5);
    const double t = 1.0;
    const double k = bilinear_vertex_ray(f, t, 2.0);
    double best = -1e300, at = 0;
    for (double tau2 = 1.0; tau2 <= 1e3; tau2 *= 1.5) {
        const double v = bilinear_value(f, t, 2.0, 4.0, k * tau2, tau2).logmag;
        if (v > best) {
            best = v;
            at = tau2;
        }
        if (best > std::log(1e6)) break;
    }
    if (best <= std::log(1e6)) return false;
    detail = "diverges at tau2 = " + std::to_string(at);
    for (double tau2 = 0.25; tau2 <= 1e3; tau2 *= 2.0)
        for (double ratio : {0.25, 0.5, 1.0, 2.0, 4.0})
            if (bilinear_value(f, t, 2.0, 3.0, k * ratio * tau2, tau2).logmag >
                std::log1p(1e-6))
                return false;
    return true;
}

bool check_slopes(std::string& detail) {
    for (double t : {0.5, 1.0}) {
        const double slope = f_series(BernsteinFn::identity(), t, 400.0).logmag / 400.0;
        if (std::fabs(slope / std::exp(-t) - 1.0) > 0.01) return false;
    }
    const double s = f_series_slope(BernsteinFn::poisson(), 1.0, 400.0);
    detail = "sqrt-subordinator slope " + std::to_string(s);
    return std::fabs(s - 1.0) < 0.05;
}

bool check_ultra(std::string& detail) {
    const std::vector<std::pair<double, double>> params = {{0, 0}, {0.5, -0.5}, {1, 1}};
    for (const auto& [alpha, beta] : params) {
        const double expo = std::max(alpha, beta) + 1.0;
        double lo = 1e300, hi = -1e300;
        for (double s : {1e-3, 1e-2, 1e-1, 1.0}) {
            const double scaled =
                std::pow(std::min(1.0, s), expo) * ultra_norm_estimate(alpha, beta, s).value;
            lo = std::min(lo, scaled);
            hi = std::max(hi, scaled);
        }
        if (hi / lo >= 10.0) {
            detail = "scaling spread " + std::to_string(hi / lo) + " at alpha = " +
                     std::to_string(alpha);
            return false;
        }
    }
    const double a = 0.5, b = 0.0, s = 0.05, x = 0.4, y = -0.2;
    if (std::fabs(jacobi_heat_kernel(a, b, s, x, y).value -
                  jacobi_heat_kernel(a, b, s, y, x).value) > 1e-12)
        return false;
    const double mass =
        integrate(
            [&](double z) {
                return LogValue::from_double(jacobi_heat_kernel(a, b, s, x, z).value);
            },
            Measure::jacobi(a, b))
            .to_double();
    if (std::fabs(mass - 1.0) > 1e-8) return false;
    const double comp =
        integrate(
            [&](double z) {
                return LogValue::from_double(jacobi_heat_kernel(a, b, s, x, z).value *
                                             jacobi_heat_kernel(a, b, s, z, y).value);
            },
            Measure::jacobi(a, b))
            .to_double();
    return std::fabs(comp / jacobi_heat_kernel(a, b, 2 * s, x, y).value - 1.0) < 1e-8;
}

bool check_poincare(std::string& detail) {
    const BernsteinFn sq = BernsteinFn::stable(0.5);
    const RateFunction beta = power_rate(RateFunction::Kind::Super, 1.0, 1.5);
    const RateFunction alpha = power_rate(RateFunction::Kind::Weak, 1.0, 2.0);
    const RateFunction bh = transform_super(beta, sq);
    const RateFunction ah = transform_weak(alpha, sq);
    for (int i = 0; i < 1000; ++i) {
        const double r = std::pow(10.0, -4.0 + 8.0 * i / 999.0);
        if (std::fabs(bh(r) / (4.0 * beta(r * r / 8.0)) - 1.0) > 1e-13) return false;
        if (std::fabs(ah(r) / (2.0 * std::sqrt(2.0 * alpha(r / 4.0))) - 1.0) > 1e-13)
            return false;
    }
    for (double theta : {0.5, 0.25}) {
        for (double m : {1.0, 2.0}) {
            RateFunction pw;
            pw.kind = RateFunction::Kind::Super;
            pw.value = [m](double r) { return std::pow(r, -m); };
            const double slope =
                rate_loglog_slope(transform_super(pw, BernsteinFn::stable(theta)), 1e-6, 1e-2);
            if (std::fabs(slope + m / theta) > 0.01) {
                detail = "slope " + std::to_string(slope) + " vs " + std::to_string(-m / theta);
                return false;
            }
        }
    }
    return true;
}

bool check_limits(std::string& detail) {
    for (unsigned n = 0; n <= 8; ++n) {
        double prev_j = 1e300, prev_g = 1e300, at4_j = 0, at4_g = 0;
        for (double scale : {1e2, 1e3, 1e4, 1e5}) {
            const double rj = limit_residual_jacobi_to_laguerre(n, 0.0, scale, 1.0);
            const double rg = limit_residual_gegenbauer_to_hermite(n, scale, 0.7);
            if (!(rj <= prev_j || (rj < 1e-12 && prev_j < 1e-12))) return false;
            if (!(rg <= prev_g || (rg < 1e-12 && prev_g < 1e-12))) return false;
            prev_j = rj;
            prev_g = rg;
            if (scale == 1e4) {
                at4_j = rj;
                at4_g = rg;
            }
        }
        if (at4_j >= 1e-2 || at4_g >= 1e-2) return false;
    }
    const DegenerationCertificate c = degeneration_certificate(0.0, 1.0, 2, 4, 10.0);
    if (!c.found) return false;
    detail = "certificate n = " + std::to_string(c.n) + ", beta0 = " + std::to_string(c.beta0);
    return rescaled_lower_bound(0.0, c.beta0, 1.0, 2, 4, c.n).to_double() > 20.0;
}

bool check_necessary() {
    auto a = [](unsigned n) { return std::exp(-std::sqrt(static_cast<double>(n))); };
    for (double p : {1.5, 2.0, 3.0, 4.0})
        for (double q : {p + 0.5, p + 1.0, 2.0 * p, 4.0 * p})
            if (!multiplier_necessary_condition(a, 0.0, p, q, 300).first_violation.has_value())
                return false;
    return true;
}

}  // namespace

std::vector<Certification> certify_all() {
    std::vector<Certification> out;
    auto add = [&](int id, std::string name, auto&& fn) {
        Certification c;
        c.id = id;
        c.name = std::move(name);
        if constexpr (std::is_invocable_v<decltype(fn), std::string&>) {
            c.passed = fn(c.detail);
        } else {
            c.passed = fn();
        }
        out.push_back(std::move(c));
    };
    add(1, "hermite sandwich, n = 1..60, q in {3,4,6}", check_sandwich);
    add(2, "growth-rate limits (hermite 1/2 log 3, laguerre log 3)", check_rates);
    add(3, "fourier coefficient identities to 1e-10", check_fourier);
    add(4, "poisson kernel identity on the 5x5 grid", check_poisson_kernel);
    add(5, "blow-up certificate for f = sqrt, t = 1, (2,4)", check_blowup);
    add(6, "classification case splits on a 20-point grid", check_classification);
    add(7, "bilinear divergence / boundedness split", check_bilinear);
    add(8, "F_t slopes (identity oracle, sqrt extrapolation)", check_slopes);
    add(9, "jacobi ultracontractive scaling and kernel identities", check_ultra);
    add(10, "poincare sqrt-specializations and exponent law", check_poincare);
    add(11, "askey limits and degeneration certificate", check_limits);
    add(12, "laguerre necessary-condition violations for e^{-t sqrt n}", check_necessary);
    return out;
}

}  // namespace hyplab
