#include <doctest.h>

#include <cmath>

#include "hyplab/norm_bounds.hpp"
#include "hyplab/quadrature.hpp"

using namespace hyplab;

TEST_CASE("hermite bounds bracket frozen norm values") {
    // ||h_1||_4 = 3^{1/4}
    const HermiteBounds b = hermite_bounds(1, 4);
    const double exact = std::pow(3.0, 0.25);
    CHECK(b.lower.to_double() <= exact);
    CHECK(b.upper.to_double() >= exact);
    CHECK(b.upper.to_double() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(b.lower.to_double() ==
          doctest::Approx(std::sqrt(3.0) * std::pow(2.0 * M_PI, -0.25) * std::exp(-1.0 / 24.0))
              .epsilon(1e-14));
}

TEST_CASE("hermite sandwich at spot degrees") {
    for (unsigned n : {1u, 7u, 30u, 60u}) {
        for (double q : {3.0, 4.0, 6.0}) {
            const NormBoundReport r = hermite_sandwich(n, q);
            CHECK(r.passed);
            CHECK(r.lower <= r.measured);
            CHECK(r.measured <= r.upper);
        }
    }
}

TEST_CASE("laguerre lower bound frozen value and validity") {
    // n = 0, alpha = 0, q = 4, rho = 2: (1 - (4/3)(2/3))^{3/4} (1/3)^{-1} = 3^{-1/2}
    CHECK(laguerre_lower(0, 0, 4, 2).to_double() ==
          doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));
    // the bound must sit below the measured norm and the upper bound
    for (unsigned n : {1u, 5u, 20u}) {
        const LogValue measured = normalized_poly_lp_norm(PolyFamily::laguerre(0), n, 4);
        CHECK(laguerre_lower(n, 0, 4, 2).to_double() <= measured.to_double() * (1 + 1e-10));
        CHECK(measured.to_double() <= laguerre_upper(n, 0, 4).to_double() * (1 + 1e-10));
    }
    CHECK(laguerre_upper(10, 0, 4).logmag == doctest::Approx(10.0 * std::log(3.0)));
    CHECK_THROWS(laguerre_lower(1, 0, 4, 3.5));  // rho must stay below q - 1
}

TEST_CASE("fourier coefficients: closed form vs quadrature oracle") {
    for (unsigned n : {0u, 3u, 12u, 30u}) {
        for (double b : {0.1, 1.0, 3.0}) {
            const LogValue cf = fourier_coefficient(PolyFamily::hermite(), n, b);
            const LogValue qd = fourier_coefficient_quadrature(PolyFamily::hermite(), n, b);
            CHECK(qd.to_double() / cf.to_double() == doctest::Approx(1.0).epsilon(1e-10));
        }
        for (double b : {0.1, 0.5, 0.9}) {
            const LogValue cf = fourier_coefficient(PolyFamily::laguerre(0.5), n, b);
            const LogValue qd = fourier_coefficient_quadrature(PolyFamily::laguerre(0.5), n, b);
            CHECK(qd.to_double() / cf.to_double() == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("hermite coefficient closed form, frozen") {
    // <h_2, e^{x}> = (2^2 2!)^{-1/2} e^{1/4} = e^{1/4} / (2 sqrt 2)
    CHECK(fourier_coefficient(PolyFamily::hermite(), 2, 1.0).to_double() ==
          doctest::Approx(std::exp(0.25) / (2.0 * std::sqrt(2.0))).epsilon(1e-13));
}

TEST_CASE("laguerre coefficient signs alternate") {
    for (unsigned n = 0; n < 6; ++n)
        CHECK(fourier_coefficient(PolyFamily::laguerre(0), n, 0.3).sign ==
              (n % 2 == 0 ? 1 : -1));
}

TEST_CASE("normalized laguerre coefficient consistent with the classical one") {
    const double alpha = 0.5, b = 0.4;
    for (unsigned n : {1u, 4u, 9u}) {
        const LogValue classical = fourier_coefficient(PolyFamily::laguerre(alpha), n, b);
        const LogValue normalized = laguerre_normalized_fourier_coefficient(alpha, n, b);
        const double ratio = std::exp(log_classical_l2_norm(PolyFamily::laguerre(alpha), n));
        CHECK(classical.to_double() / normalized.to_double() ==
              doctest::Approx(ratio).epsilon(1e-12));
    }
}

TEST_CASE("growth rates approach the log-ratio limits") {
    const double herm = growth_rate(PolyFamily::hermite(), 2, 4, 30, 45);
    CHECK(herm == doctest::Approx(0.5 * std::log(3.0)).epsilon(0.05));
    const double lag = growth_rate(PolyFamily::laguerre(0), 2, 4, 30, 45);
    CHECK(lag == doctest::Approx(std::log(3.0)).epsilon(0.10));
}

TEST_CASE("hypothesis checks") {
    CHECK_THROWS(hermite_bounds(0, 4));
    CHECK_THROWS(hermite_bounds(3, 2.0));   // q > 2 only
    CHECK_THROWS(laguerre_upper(3, -0.7, 4));  // alpha >= -1/2 only
    CHECK_THROWS(growth_rate(PolyFamily::hermite(), 2, 4, 3, 8));  // window floor
}
