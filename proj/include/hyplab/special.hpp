#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace hyplab {

/// log Gamma(x) for x > 0.
inline double log_gamma(double x) { return std::lgamma(x); }

/// log Beta(a, b).
inline double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double gamma_q(double a, double x);

/// Unregularized upper incomplete gamma Gamma(a, x).
inline double upper_incomplete_gamma(double a, double x) {
    return gamma_q(a, x) * std::tgamma(a);
}

/// Unregularized lower incomplete gamma gamma(a, x).
inline double lower_incomplete_gamma(double a, double x) {
    return gamma_p(a, x) * std::tgamma(a);
}

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Double-exponential (tanh-sinh) quadrature of f on (0, 1).
/// Handles integrable endpoint singularities; level-doubled until the
/// estimate is stable to relative tol.
double integrate_unit_ts(const std::function<double(double)>& f, double tol = 1e-12);

}  // namespace hyplab
