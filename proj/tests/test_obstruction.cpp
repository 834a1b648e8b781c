#include <doctest.h>

#include <cmath>

#include "hyplab/obstruction.hpp"
#include "hyplab/quadrature.hpp"

using namespace hyplab;

TEST_CASE("eigen lower bound pieces") {
    const BernsteinFn f = BernsteinFn::poisson();
    CHECK(eigen_lower_bound(PolyFamily::hermite(), f, 1.0, 2, 4, 0).to_double() ==
          doctest::Approx(1.0));
    const unsigned n = 6;
    const LogValue expected = log_exp(-std::sqrt(6.0)) *
                              normalized_poly_lp_norm(PolyFamily::hermite(), n, 4);
    CHECK(eigen_lower_bound(PolyFamily::hermite(), f, 1.0, 2, 4, n).to_double() ==
          doctest::Approx(expected.to_double()).epsilon(1e-10));
    CHECK_THROWS(eigen_lower_bound(PolyFamily::hermite(), f, 1.0, 4, 2, 3));  // p < q
}

TEST_CASE("rate kappa grows with the window (infinite-rate signature)") {
    const double s1 = rate_kappa(PolyFamily::hermite(), 2, 4, 10, 20);
    const double s2 = rate_kappa(PolyFamily::hermite(), 2, 4, 30, 40);
    CHECK(s1 > 0.0);
    CHECK(s2 > s1);
}

TEST_CASE("F_t series against the identity-drift closed form") {
    // f = lambda: F_t(z) = exp(z e^{-t})
    const BernsteinFn id = BernsteinFn::identity();
    for (double t : {0.5, 1.0})
        for (double z : {0.1, 5.0, 400.0})
            CHECK(f_series(id, t, z).logmag ==
                  doctest::Approx(z * std::exp(-t)).epsilon(1e-10));
    CHECK(f_series(id, 1.0, 0.0).to_double() == doctest::Approx(1.0));
    // killing only scales: F with a > 0 equals e^{-ta} F_0-less version
    const BernsteinFn killed(0.7, 1.0);
    CHECK(f_series(killed, 1.0, 5.0).logmag ==
          doctest::Approx(-0.7 + 5.0 * std::exp(-1.0)).epsilon(1e-10));
}

TEST_CASE("F_t sandwich for a general bernstein function") {
    // e^{-t f(n)} is decreasing in n, so e^{-tf(large)} e^z <= F <= e^z
    const BernsteinFn f = BernsteinFn::stable(0.5);
    const double t = 1.0, z = 50.0;
    const double F = f_series(f, t, z).logmag;
    CHECK(F < z);
    CHECK(F > z - t * std::sqrt(4.0 * z));  // crude floor: bulk terms have n <~ 4z
}

TEST_CASE("F_t slope extrapolation") {
    CHECK(f_series_slope(BernsteinFn::identity(), 1.0, 100.0) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
    // f = sqrt(lambda): slope tends to e^{-0 * t} = 1
    CHECK(f_series_slope(BernsteinFn::poisson(), 1.0, 400.0) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("bilinear value closed form for identity drift") {
    const BernsteinFn half(0, 0.5);
    const double t = 1.0, p = 2.0, q = 4.0, tau1 = 3.0, tau2 = 5.0;
    const double qp = q / (q - 1.0);
    const double expected = -0.25 * ((p - 1) * tau1 * tau1 + (qp - 1) * tau2 * tau2) +
                            0.5 * tau1 * tau2 * std::exp(-0.5);
    CHECK(bilinear_value(half, t, p, q, tau1, tau2).logmag ==
          doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("vertex ray") {
    CHECK(bilinear_vertex_ray(BernsteinFn(0, 0.5), 1.0, 2.0) ==
          doctest::Approx(std::exp(-0.5)));
    CHECK(bilinear_vertex_ray(BernsteinFn(0, 0.5), 1.0, 3.0) ==
          doctest::Approx(std::exp(-0.5) / 2.0));
}

TEST_CASE("classification thresholds") {
    const BernsteinFn f(0.25, 0.5);  // killing 1/4, drift 1/2
    const Classification blow = classify_ou(f, 1.0, 2.0, 4.0);
    CHECK(blow.threshold_q == doctest::Approx(1.0 + std::exp(1.0)));
    CHECK(blow.blow_up);
    CHECK(std::isinf(blow.log_norm));
    const Classification bdd = classify_ou(f, 1.0, 2.0, 3.0);
    CHECK(!bdd.blow_up);
    CHECK(bdd.log_norm == doctest::Approx(-0.25));
    // boundary q = threshold stays bounded
    const Classification edge = classify_ou(f, 1.0, 2.0, 1.0 + std::exp(1.0));
    CHECK(!edge.blow_up);
    // laguerre threshold uses e^{bt}, not e^{2bt}
    const Classification lag = classify_laguerre(f, 1.0, 2.0, 3.0);
    CHECK(lag.threshold_q == doctest::Approx(1.0 + std::exp(0.5)));
    CHECK(lag.blow_up);
    // q = p is trivially bounded; q < p is rejected
    const Classification triv = classify_ou(f, 1.0, 2.0, 2.0);
    CHECK(!triv.blow_up);
    CHECK(triv.log_norm == doctest::Approx(-0.25));
    CHECK_THROWS_AS(classify_ou(f, 1.0, 2.0, 1.5), std::invalid_argument);
}

TEST_CASE("discriminant sign matches the OU verdict") {
    const BernsteinFn f(0, 0.5);
    for (double q : {2.5, 3.0, 3.7, 3.8, 5.0}) {
        const Classification c = classify_ou(f, 1.0, 2.0, q);
        // q > 1 + e^{2bt} iff q' - 1 < e^{-2bt}, i.e. discriminant > 0
        CHECK(c.blow_up == (c.discriminant > 0.0));
    }
}

TEST_CASE("parseval series: geometric oracle") {
    // a_n = r^n gives ((1-tau1)(1-tau2))^{-(alpha+1)} (1 - r rho)^{-(alpha+1)}
    const double alpha = 0.5, p = 2.0, q = 4.0, tau1 = 0.3, tau2 = 0.4, r = 0.5;
    const double rho = parseval_rho(tau1, tau2);
    REQUIRE(r * rho < 1.0);
    const ParsevalResult res = laguerre_parseval(
        [r](unsigned n) { return std::pow(r, static_cast<double>(n)); }, alpha, p, q, tau1,
        tau2, 400);
    const double expected = std::pow((1 - tau1) * (1 - tau2), -(alpha + 1)) *
                            std::pow(1 - r * rho, -(alpha + 1));
    CHECK(res.value.to_double() == doctest::Approx(expected).epsilon(1e-12));
    CHECK(!res.diverging);
}

TEST_CASE("parseval divergence flag") {
    // a_n = 2^n with 2 rho > 1: terms grow at the truncation point
    const double tau1 = 0.45, tau2 = 0.6;
    const ParsevalResult res = laguerre_parseval(
        [](unsigned n) { return std::pow(2.0, static_cast<double>(n)); }, 0.0, 2.0, 4.0, tau1,
        tau2, 100);
    CHECK(res.diverging);
    CHECK_THROWS_AS(laguerre_parseval([](unsigned) { return 1.0; }, 0.0, 2.0, 4.0, 0.6, 0.4, 50),
                    std::domain_error);  // tau1 >= 1/p
}

TEST_CASE("witness taus and their rho limit") {
    const double alpha = 0.0, p = 2.0, q = 4.0;
    const auto [t1, t2] = parseval_witness_taus(alpha, p, q, 1000);
    CHECK(t1 < 1.0 / p);
    CHECK(t2 < (q - 1.0) / q);
    // rho approaches (q-1)/(p-1) = 3 from below at rate 1/n
    CHECK(parseval_rho(t1, t2) == doctest::Approx(3.0).epsilon(1e-2));
}

TEST_CASE("necessary-condition report for the poisson multiplier") {
    auto a = [](unsigned n) { return std::exp(-std::sqrt(static_cast<double>(n))); };
    const NecessaryConditionReport rep = multiplier_necessary_condition(a, 0.0, 2.0, 4.0, 100);
    CHECK(rep.threshold == doctest::Approx(1.0 / 3.0));
    CHECK(rep.first_violation.has_value());
    CHECK(*rep.first_violation <= 2);  // e^{-1/sqrt(n)} clears 1/3 immediately
    CHECK(rep.roots.size() == 100);
    CHECK(rep.rho_at_nmax < rep.rho_limit);
    CHECK(rep.fitted_rho_deviation_constant > 0.0);
    // a compliant multiplier raises no violation: a_n = (1/4)^n under threshold 1/3
    auto ok = [](unsigned n) { return std::pow(0.25, static_cast<double>(n)); };
    CHECK(!multiplier_necessary_condition(ok, 0.0, 2.0, 4.0, 100).first_violation.has_value());
}
