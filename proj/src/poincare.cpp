#include "hyplab/poincare.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hyplab/special.hpp"

namespace hyplab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

RateFunction power_rate(RateFunction::Kind kind, double c, double m) {
    if (!(c > 0.0) || m < 0.0) throw std::invalid_argument("power_rate: c > 0, m >= 0");
    RateFunction rf;
    rf.kind = kind;
    rf.value = [c, m](double r) {
        if (!(r > 0.0)) throw std::domain_error("rate function: r > 0 required");
        return c * (1.0 + std::pow(r, -m));
    };
    rf.description = std::to_string(c) + " (1 + r^-" + std::to_string(m) + ")";
    return rf;
}

double bernstein_inverse(const BernsteinFn& f, double u, double rel_tol) {
    if (!(u >= 0.0)) throw std::domain_error("bernstein_inverse: u >= 0 required");
    const double a = f.killing();
    if (u < a) return kInf;
    if (u == a) return 0.0;

    const auto& levy = f.levy();
    if (levy.empty()) return (u - a) / f.drift();  // affine; drift > 0 by non-triviality
    if (f.drift() == 0.0 && a == 0.0 && levy.type == LevySpec::Type::Stable)
        return std::pow(u, 1.0 / levy.theta);

    // bracket [lo, hi] with f(hi) >= u; f is strictly increasing
    double hi = 1.0;
    while (f(hi) < u) {
        hi *= 2.0;
        if (hi > 1e300) return kInf;  // f bounded below u (pure-jump with finite levy mass)
    }
    double lo = 0.0;
    while (hi - lo > rel_tol * hi) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

RateFunction transform_super(const RateFunction& beta, const BernsteinFn& f) {
    if (beta.kind != RateFunction::Kind::Super)
        throw std::invalid_argument("transform_super: super rate required");
    RateFunction rf;
    rf.kind = RateFunction::Kind::Super;
    rf.value = [beta, f](double r) {
        if (!(r > 0.0)) throw std::domain_error("rate function: r > 0 required");
        const double inv = bernstein_inverse(f, 2.0 / r);
        if (inv == kInf) return kInf;       // 2/r below the killing rate
        if (inv == 0.0) return 4.0 * beta.value(kInf);
        return 4.0 * beta.value(1.0 / (2.0 * inv));
    };
    rf.description = "4 beta(1/(2 f^-1(2/r)))";
    return rf;
}

RateFunction transform_weak(const RateFunction& alpha, const BernsteinFn& f) {
    if (alpha.kind != RateFunction::Kind::Weak)
        throw std::invalid_argument("transform_weak: weak rate required");
    RateFunction rf;
    rf.kind = RateFunction::Kind::Weak;
    rf.value = [alpha, f](double r) {
        if (!(r > 0.0)) throw std::domain_error("rate function: r > 0 required");
        const double av = alpha.value(r / 4.0);
        const double arg = (av == kInf) ? 0.0 : 1.0 / (2.0 * av);
        const double fv = f(arg);
        return fv == 0.0 ? kInf : 2.0 / fv;
    };
    rf.description = "2 / f(1/(2 alpha(r/4)))";
    return rf;
}

RateFunction jacobi_super_rate(double alpha, double beta, double c) {
    if (!(alpha >= -0.5) || !(beta >= -0.5))
        throw std::invalid_argument("jacobi_super_rate: alpha, beta >= -1/2 required");
    return power_rate(RateFunction::Kind::Super, c, std::max(alpha, beta) + 1.0);
}

double rate_loglog_slope(const RateFunction& rate, double r_lo, double r_hi, unsigned samples) {
    if (!(r_lo > 0.0) || !(r_hi > r_lo) || samples < 2)
        throw std::invalid_argument("rate_loglog_slope: 0 < r_lo < r_hi, samples >= 2");
    std::vector<double> xs, ys;
    const double step = std::log(r_hi / r_lo) / (samples - 1);
    for (unsigned i = 0; i < samples; ++i) {
        const double r = r_lo * std::exp(step * i);
        const double v = rate.value(r);
        if (!std::isfinite(v)) continue;
        xs.push_back(std::log(r));
        ys.push_back(std::log(v));
    }
    if (xs.size() < 2) throw std::runtime_error("rate_loglog_slope: rate infinite on the grid");
    return fit_slope(xs, ys);
}

}  // namespace hyplab
