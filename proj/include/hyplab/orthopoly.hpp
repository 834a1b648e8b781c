#pragma once

#include <string>

#include "hyplab/log_value.hpp"

namespace hyplab {

enum class PolyKind { Hermite, Laguerre, Jacobi, Gegenbauer };

/// One of the classical eigenfunction families together with its
/// parameters. Gegenbauer(lambda) is the symmetric Jacobi family
/// (lambda - 1/2, lambda - 1/2) up to a Gamma-ratio prefactor in the
/// classical normalization.
struct PolyFamily {
    PolyKind kind = PolyKind::Hermite;
    double alpha = 0.0;   // Laguerre / Jacobi
    double beta = 0.0;    // Jacobi
    double lambda = 0.0;  // Gegenbauer

    static PolyFamily hermite() { return {PolyKind::Hermite}; }
    static PolyFamily laguerre(double alpha) { return {PolyKind::Laguerre, alpha}; }
    static PolyFamily jacobi(double alpha, double beta) { return {PolyKind::Jacobi, alpha, beta}; }
    static PolyFamily gegenbauer(double lambda) { return {PolyKind::Gegenbauer, 0, 0, lambda}; }

    /// Throws std::invalid_argument on out-of-range parameters
    /// (alpha, beta > -1; lambda > 0).
    void validate() const;

    /// True iff x lies in the family's natural domain; Jacobi/Gegenbauer
    /// admit the closed interval endpoints.
    bool in_domain(double x) const;

    /// Eigenvalue of -L on the degree-n eigenfunction: n for
    /// Hermite/Laguerre, n(n + alpha + beta + 1) for Jacobi, and the
    /// symmetric Jacobi value n(n + 2 lambda) for Gegenbauer.
    double eigenvalue(unsigned n) const;

    std::string name() const;
};

/// Classical polynomial H_n, L_n^alpha, J_n^{(alpha,beta)} or C_n^lambda
/// at x, by forward three-term recurrence in log-sign arithmetic.
LogValue eval_classical(const PolyFamily& family, unsigned n, double x);

/// L^2-normalized polynomial h_n, ell_n^alpha or j_n^{(alpha,beta)}
/// against the family's invariant probability measure. Gegenbauer maps
/// to the normalized symmetric Jacobi polynomial.
LogValue eval_normalized(const PolyFamily& family, unsigned n, double x);

/// log of the L^2(mu) norm of the classical polynomial, via log-Gamma.
double log_classical_l2_norm(const PolyFamily& family, unsigned n);

/// log of the Gamma-ratio prefactor linking C_n^lambda to
/// J_n^{(lambda-1/2, lambda-1/2)}.
double log_gegenbauer_jacobi_factor(double lambda, unsigned n);

}  // namespace hyplab
