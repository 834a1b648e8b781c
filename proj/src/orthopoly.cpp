#include "hyplab/orthopoly.hpp"

#include <cmath>
#include <stdexcept>

#include "hyplab/special.hpp"

namespace hyplab {

void PolyFamily::validate() const {
    switch (kind) {
        case PolyKind::Hermite:
            return;
        case PolyKind::Laguerre:
            if (!(alpha > -1.0)) throw std::invalid_argument("Laguerre: require alpha > -1");
            return;
        case PolyKind::Jacobi:
            if (!(alpha > -1.0) || !(beta > -1.0))
                throw std::invalid_argument("Jacobi: require alpha, beta > -1");
            return;
        case PolyKind::Gegenbauer:
            if (!(lambda > 0.0)) throw std::invalid_argument("Gegenbauer: require lambda > 0");
            return;
    }
    throw std::invalid_argument("PolyFamily: unknown kind");
}

bool PolyFamily::in_domain(double x) const {
    switch (kind) {
        case PolyKind::Hermite:
            return std::isfinite(x);
        case PolyKind::Laguerre:
            return x >= 0.0;
        case PolyKind::Jacobi:
        case PolyKind::Gegenbauer:
            return x >= -1.0 && x <= 1.0;
    }
    return false;
}

double PolyFamily::eigenvalue(unsigned n) const {
    validate();
    const double dn = static_cast<double>(n);
    switch (kind) {
        case PolyKind::Hermite:
        case PolyKind::Laguerre:
            return dn;
        case PolyKind::Jacobi:
            return dn * (dn + alpha + beta + 1.0);
        case PolyKind::Gegenbauer:
            return dn * (dn + 2.0 * lambda);
    }
    return 0.0;
}

std::string PolyFamily::name() const {
    switch (kind) {
        case PolyKind::Hermite:
            return "hermite";
        case PolyKind::Laguerre:
            return "laguerre(" + std::to_string(alpha) + ")";
        case PolyKind::Jacobi:
            return "jacobi(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
        case PolyKind::Gegenbauer:
            return "gegenbauer(" + std::to_string(lambda) + ")";
    }
    return "?";
}

namespace {

LogValue eval_hermite(unsigned n, double x) {
    LogValue prev = LogValue::one();             // H_0
    if (n == 0) return prev;
    LogValue cur = LogValue::from_double(2.0 * x);  // H_1
    for (unsigned k = 1; k < n; ++k) {
        // H_{k+1} = 2x H_k - 2k H_{k-1}
        LogValue next = 2.0 * x * cur - (2.0 * k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

LogValue eval_laguerre(double alpha, unsigned n, double x) {
    LogValue prev = LogValue::one();                       // L_0
    if (n == 0) return prev;
    LogValue cur = LogValue::from_double(alpha + 1.0 - x);  // L_1
    for (unsigned k = 1; k < n; ++k) {
        // (k+1) L_{k+1} = (2k + alpha + 1 - x) L_k - (k + alpha) L_{k-1}
        LogValue next = (2.0 * k + alpha + 1.0 - x) * cur - (k + alpha) * prev;
        next = next * LogValue::from_double(1.0 / (k + 1.0));
        prev = cur;
        cur = next;
    }
    return cur;
}

LogValue eval_jacobi(double alpha, double beta, unsigned n, double x) {
    LogValue prev = LogValue::one();  // J_0
    if (n == 0) return prev;
    LogValue cur = LogValue::from_double(0.5 * ((alpha + beta + 2.0) * x + (alpha - beta)));
    const double ab = alpha + beta;
    for (unsigned k = 2; k <= n; ++k) {
        const double m = static_cast<double>(k);
        const double c0 = 2.0 * m * (m + ab) * (2.0 * m + ab - 2.0);
        const double c1 = (2.0 * m + ab - 1.0) * (2.0 * m + ab) * (2.0 * m + ab - 2.0);
        const double c2 = (2.0 * m + ab - 1.0) * (alpha * alpha - beta * beta);
        const double c3 = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * (2.0 * m + ab);
        LogValue next = (c1 * x + c2) * cur - c3 * prev;
        next = next * LogValue::from_double(1.0 / c0);
        prev = cur;
        cur = next;
    }
    return cur;
}

LogValue eval_gegenbauer(double lambda, unsigned n, double x) {
    LogValue prev = LogValue::one();                          // C_0
    if (n == 0) return prev;
    LogValue cur = LogValue::from_double(2.0 * lambda * x);   // C_1
    for (unsigned k = 2; k <= n; ++k) {
        const double m = static_cast<double>(k);
        // m C_m = 2x (m + lambda - 1) C_{m-1} - (m + 2 lambda - 2) C_{m-2}
        LogValue next = (2.0 * x * (m + lambda - 1.0)) * cur - (m + 2.0 * lambda - 2.0) * prev;
        next = next * LogValue::from_double(1.0 / m);
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

LogValue eval_classical(const PolyFamily& family, unsigned n, double x) {
    family.validate();
    if (!family.in_domain(x)) throw std::domain_error("eval_classical: x outside domain");
    switch (family.kind) {
        case PolyKind::Hermite:
            return eval_hermite(n, x);
        case PolyKind::Laguerre:
            return eval_laguerre(family.alpha, n, x);
        case PolyKind::Jacobi:
            return eval_jacobi(family.alpha, family.beta, n, x);
        case PolyKind::Gegenbauer:
            return eval_gegenbauer(family.lambda, n, x);
    }
    throw std::invalid_argument("eval_classical: unknown family");
}

double log_gegenbauer_jacobi_factor(double lambda, unsigned n) {
    return log_gamma(lambda + 0.5) + log_gamma(n + 2.0 * lambda) - log_gamma(2.0 * lambda) -
           log_gamma(n + lambda + 0.5);
}

double log_classical_l2_norm(const PolyFamily& family, unsigned n) {
    family.validate();
    if (n == 0) return 0.0;
    const double dn = static_cast<double>(n);
    switch (family.kind) {
        case PolyKind::Hermite:
            // ||H_n||^2 = 2^n n!
            return 0.5 * (dn * std::log(2.0) + log_gamma(dn + 1.0));
        case PolyKind::Laguerre:
            // ||L_n^a||^2 = Gamma(n+a+1) / (Gamma(a+1) n!)
            return 0.5 * (log_gamma(dn + family.alpha + 1.0) - log_gamma(family.alpha + 1.0) -
                          log_gamma(dn + 1.0));
        case PolyKind::Jacobi: {
            const double a = family.alpha, b = family.beta;
            const double log_n2 = log_gamma(dn + a + 1.0) + log_gamma(dn + b + 1.0) +
                                  log_gamma(a + b + 2.0) - std::log(2.0 * dn + a + b + 1.0) -
                                  log_gamma(dn + a + b + 1.0) - log_gamma(dn + 1.0) -
                                  log_gamma(a + 1.0) - log_gamma(b + 1.0);
            return 0.5 * log_n2;
        }
        case PolyKind::Gegenbauer: {
            const PolyFamily jac = PolyFamily::jacobi(family.lambda - 0.5, family.lambda - 0.5);
            return log_gegenbauer_jacobi_factor(family.lambda, n) + log_classical_l2_norm(jac, n);
        }
    }
    throw std::invalid_argument("log_classical_l2_norm: unknown family");
}

LogValue eval_normalized(const PolyFamily& family, unsigned n, double x) {
    if (family.kind == PolyKind::Gegenbauer) {
        const PolyFamily jac = PolyFamily::jacobi(family.lambda - 0.5, family.lambda - 0.5);
        return eval_normalized(jac, n, x);
    }
    const LogValue p = eval_classical(family, n, x);
    if (p.is_zero()) return p;
    return LogValue::from_log(p.sign, p.logmag - log_classical_l2_norm(family, n));
}

}  // namespace hyplab
