#include <doctest.h>

#include <cmath>

#include "hyplab/quadrature.hpp"
#include "hyplab/subordination.hpp"

using namespace hyplab;

TEST_CASE("subordinated multiplier values") {
    const MultiplierSequence seq =
        subordinated_multiplier(BernsteinFn::poisson(), 2.0, PolyFamily::hermite());
    CHECK(seq.a(0) == doctest::Approx(1.0));
    CHECK(seq.a(9) == doctest::Approx(std::exp(-6.0)).epsilon(1e-12));
    const MultiplierSequence jac =
        subordinated_multiplier(BernsteinFn::identity(), 0.5, PolyFamily::jacobi(1, 1));
    CHECK(jac.a(2) == doctest::Approx(std::exp(-0.5 * 10.0)).epsilon(1e-12));
}

TEST_CASE("poisson kernel identity residual") {
    for (double t : {0.2, 1.0, 3.0})
        for (double lam : {0.0, 1.0, 16.0}) CHECK(poisson_kernel_identity(t, lam) < 1e-8);
}

TEST_CASE("jacobi heat kernel: mass, symmetry, semigroup") {
    const double alpha = 0.5, beta = 0.0, s = 0.05;
    // symmetry
    CHECK(jacobi_heat_kernel(alpha, beta, s, 0.3, -0.6).value ==
          doctest::Approx(jacobi_heat_kernel(alpha, beta, s, -0.6, 0.3).value).epsilon(1e-12));
    // mass: int G_s(x, y) d mu(y) = 1
    const double x0 = 0.4;
    const LogValue mass = integrate(
        [&](double y) { return LogValue::from_double(jacobi_heat_kernel(alpha, beta, s, x0, y).value); },
        Measure::jacobi(alpha, beta));
    CHECK(mass.to_double() == doctest::Approx(1.0).epsilon(1e-9));
    // semigroup: int G_s(x, z) G_s(z, y) d mu(z) = G_{2s}(x, y)
    const double y0 = -0.2;
    const LogValue comp = integrate(
        [&](double z) {
            return LogValue::from_double(jacobi_heat_kernel(alpha, beta, s, x0, z).value *
                                         jacobi_heat_kernel(alpha, beta, s, z, y0).value);
        },
        Measure::jacobi(alpha, beta));
    CHECK(comp.to_double() ==
          doctest::Approx(jacobi_heat_kernel(alpha, beta, 2 * s, x0, y0).value).epsilon(1e-9));
}

TEST_CASE("heat kernel truncation is certified") {
    const HeatKernelResult r = jacobi_heat_kernel(0, 0, 0.01, 1.0, 1.0, 1e-12);
    CHECK(r.terms > 10);
    CHECK(r.tail_bound < 1e-10 * r.value);
    CHECK(r.value > 1.0);  // kernel peaks above its mean at the diagonal corner
    CHECK_THROWS_AS(jacobi_heat_kernel(0, 0, 1e-9, 0, 0, 1e-12, 500), std::runtime_error);
}

TEST_CASE("ultra estimate sits at the favored corner") {
    const UltraEstimate u = ultra_norm_estimate(1.0, 0.0, 0.1);
    CHECK(u.arg_x == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(u.arg_y == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(u.value >= jacobi_heat_kernel(1.0, 0.0, 0.1, 1.0, 1.0).value * (1 - 1e-8));
    CHECK_THROWS(ultra_norm_estimate(-0.7, 0.0, 0.1));
}

TEST_CASE("poisson ultra bound: limits and monotonicity") {
    const double sigma = 1.5;
    // decreasing in t, tending to 1 (the s > 1 piece saturates)
    double prev = 1e300;
    for (double t : {0.1, 0.5, 1.0, 4.0, 10.0}) {
        const double v = poisson_ultra_bound(sigma, t);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(poisson_ultra_bound(sigma, 20.0) == doctest::Approx(1.0).epsilon(1e-10));
    // small-t blow-up at the t^{-sigma} rate: scaled values stay bounded
    for (double t : {1e-3, 1e-2, 1e-1}) {
        const double scaled = std::pow(t, sigma) * poisson_ultra_bound(sigma, t);
        CHECK(scaled > 0.1);
        CHECK(scaled < 10.0);
    }
}
