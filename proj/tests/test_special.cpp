#include <doctest.h>

#include <cmath>

#include "hyplab/special.hpp"

using namespace hyplab;

TEST_CASE("incomplete gamma closed forms") {
    // P(1, x) = 1 - e^{-x}
    CHECK(gamma_p(1.0, 0.7) == doctest::Approx(-std::expm1(-0.7)).epsilon(1e-13));
    // P(1/2, x) = erf(sqrt x)
    for (double x : {0.01, 0.25, 1.0, 4.0, 25.0})
        CHECK(gamma_p(0.5, x) == doctest::Approx(std::erf(std::sqrt(x))).epsilon(1e-12));
    // P(3, x) = 1 - e^{-x}(1 + x + x^2/2)
    const double x = 2.5;
    CHECK(gamma_p(3.0, x) ==
          doctest::Approx(1.0 - std::exp(-x) * (1.0 + x + x * x / 2.0)).epsilon(1e-12));
}

TEST_CASE("P + Q = 1 across the crossover") {
    for (double a : {0.3, 1.0, 2.5, 7.0})
        for (double x : {0.1, 1.0, 3.0, 10.0, 40.0})
            CHECK(gamma_p(a, x) + gamma_q(a, x) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("unregularized variants") {
    CHECK(upper_incomplete_gamma(1.0, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-13));
    CHECK(lower_incomplete_gamma(0.5, 1e4) ==
          doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
}

TEST_CASE("log gamma and log beta") {
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    CHECK(log_beta(2.0, 3.0) == doctest::Approx(std::log(1.0 / 12.0)).epsilon(1e-13));
}

TEST_CASE("fit_slope is exact on a line") {
    std::vector<double> xs, ys;
    for (int i = 0; i < 20; ++i) {
        xs.push_back(0.3 * i - 2.0);
        ys.push_back(1.7 - 4.2 * xs.back());
    }
    CHECK(fit_slope(xs, ys) == doctest::Approx(-4.2).epsilon(1e-12));
}

TEST_CASE("tanh-sinh quadrature on (0,1)") {
    CHECK(integrate_unit_ts([](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate_unit_ts([](double x) { return 1.0 / std::sqrt(x); }) ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(integrate_unit_ts([](double x) { return std::log(x); }) ==
          doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(integrate_unit_ts([](double x) { return std::pow(x, -0.7); }) ==
          doctest::Approx(1.0 / 0.3).epsilon(1e-9));
}
