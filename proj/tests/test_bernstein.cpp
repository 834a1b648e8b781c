#include <doctest.h>

#include <cmath>

#include "hyplab/bernstein.hpp"

using namespace hyplab;

TEST_CASE("closed-form symbols") {
    CHECK(BernsteinFn::stable(0.5)(4.0) == doctest::Approx(2.0));
    CHECK(BernsteinFn::identity()(3.7) == doctest::Approx(3.7));
    const BernsteinFn tilted(0, 0, LevySpec::tilted_stable(0.5, 1.0));
    CHECK(tilted(3.0) == doctest::Approx(1.0));  // sqrt(4) - sqrt(1)
    CHECK(tilted(0.0) == doctest::Approx(0.0));
    const BernsteinFn atoms(0.5, 0.25, LevySpec::from_atoms({{1.0, 2.0}}));
    CHECK(atoms(2.0) == doctest::Approx(0.5 + 0.5 + 2.0 * (-std::expm1(-2.0))));
}

TEST_CASE("levy-khintchine quadrature agrees with the symbol") {
    for (double theta : {0.3, 0.5, 0.8}) {
        const BernsteinFn f = BernsteinFn::stable(theta);
        for (double lam : {0.5, 1.0, 10.0, 400.0})
            CHECK(f.eval_quadrature(lam) == doctest::Approx(f(lam)).epsilon(1e-8));
    }
    const BernsteinFn tilted(0.1, 0.2, LevySpec::tilted_stable(0.4, 2.0));
    for (double lam : {1.0, 25.0})
        CHECK(tilted.eval_quadrature(lam) == doctest::Approx(tilted(lam)).epsilon(1e-8));
}

TEST_CASE("monotone and concave on samples (complete monotonicity shadow)") {
    const BernsteinFn f(0.2, 0.0, LevySpec::stable(0.6));
    double prev = f(0.1), prev_diff = f(0.2) - f(0.1);
    for (double lam = 0.2; lam < 50.0; lam += 0.1) {
        const double v = f(lam);
        CHECK(v >= prev);
        const double diff = v - prev;
        CHECK(diff <= prev_diff * (1 + 1e-12));
        prev = v;
        prev_diff = diff;
    }
}

TEST_CASE("triplet accessors, drift estimate, nonlinear part") {
    const BernsteinFn f(0.3, 1.5, LevySpec::stable(0.5));
    CHECK(f.killing() == 0.3);
    CHECK(f.drift() == 1.5);
    CHECK(f.drift_estimate() == doctest::Approx(1.5).epsilon(1e-3));
    const BernsteinFn nl = f.nonlinear_part();
    CHECK(nl(4.0) == doctest::Approx(2.0));
    CHECK(nl.killing() == 0.0);
    CHECK(nl.drift() == 0.0);
    // pure drift has an all-zero nonlinear part, allowed
    CHECK(BernsteinFn::identity().nonlinear_part()(7.0) == 0.0);
}

TEST_CASE("lower-order growth check") {
    CHECK(BernsteinFn::stable(0.5).lower_order_check(0.5));
    // sqrt grows slower than lambda: the sampled min lambda^{-1} f drops
    // to 1/sqrt(1e7) and a floor above that detects the failure
    CHECK(!BernsteinFn::stable(0.5).lower_order_check(1.0, 1e-3));
    CHECK(BernsteinFn::identity().lower_order_check(1.0));
    CHECK(BernsteinFn::identity().lower_order_check(0.5));
}

TEST_CASE("trivial triplet rejected; invalid parameters rejected") {
    CHECK_THROWS_AS(BernsteinFn(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(LevySpec::stable(1.0), std::invalid_argument);
    CHECK_THROWS_AS(LevySpec::tilted_stable(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(LevySpec::from_atoms({}), std::invalid_argument);
    CHECK_THROWS_AS(LevySpec::from_atoms({{-1.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(BernsteinFn(-0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(BernsteinFn::identity()(-1.0), std::domain_error);
}

TEST_CASE("json round trip") {
    const BernsteinFn f(0.1, 0.9, LevySpec::tilted_stable(0.3, 1.7));
    const BernsteinFn g = BernsteinFn::from_json(f.to_json());
    for (double lam : {0.0, 1.0, 10.0}) CHECK(g(lam) == doctest::Approx(f(lam)).epsilon(1e-15));

    const BernsteinFn atoms(0, 0, LevySpec::from_atoms({{1.0, 2.0}, {0.5, 0.1}}));
    const BernsteinFn atoms2 = BernsteinFn::from_json(atoms.to_json());
    CHECK(atoms2(3.0) == doctest::Approx(atoms(3.0)).epsilon(1e-15));

    CHECK(BernsteinFn::from_json(nlohmann::json::parse(R"({"a":0,"b":0.5})"))(2.0) ==
          doctest::Approx(1.0));
    CHECK_THROWS(BernsteinFn::from_json(nlohmann::json::parse(R"({"a":0,"b":0})")));
}
