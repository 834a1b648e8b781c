#pragma once

#include <functional>
#include <string>

#include "hyplab/bernstein.hpp"

namespace hyplab {

/// Rate function of a super- or weak-Poincare inequality: decreasing on
/// (0, inf) with values in (0, inf]. The extended value +inf is an
/// ordinary double infinity.
struct RateFunction {
    enum class Kind { Super, Weak };
    Kind kind = Kind::Super;
    std::function<double(double)> value;
    std::string description;

    double operator()(double r) const { return value(r); }
};

/// c (1 + r^{-m}) with the given kind; the building block for the
/// polynomial rates below.
RateFunction power_rate(RateFunction::Kind kind, double c, double m);

/// f^{-1}(u) for an increasing Bernstein function. Closed-form fast
/// paths for affine a + b lambda and pure-stable lambda^theta; monotone
/// bisection to relative rel_tol otherwise. Returns +inf when
/// u < f(0+) = a (no preimage) and 0 when u <= f(0).
double bernstein_inverse(const BernsteinFn& f, double u, double rel_tol = 1e-12);

/// Super-Poincare transport: beta_f(r) = 4 beta(1 / (2 f^{-1}(2/r))),
/// +inf where the inverse is undefined.
RateFunction transform_super(const RateFunction& beta, const BernsteinFn& f);

/// Weak-Poincare transport: alpha_f(r) = 2 / f(1 / (2 alpha(r/4))).
RateFunction transform_weak(const RateFunction& alpha, const BernsteinFn& f);

/// Jacobi super-Poincare rate beta(r) = c (1 + r^{-(max{alpha,beta}+1)}),
/// alpha, beta >= -1/2.
RateFunction jacobi_super_rate(double alpha, double beta, double c = 1.0);

/// Fitted log-log slope of a rate function over a log-spaced grid on
/// [r_lo, r_hi]; for beta(r) = r^{-m} transported by lambda^theta this
/// recovers -m/theta.
double rate_loglog_slope(const RateFunction& rate, double r_lo, double r_hi,
                         unsigned samples = 64);

}  // namespace hyplab
