#include <doctest.h>

#include <cmath>
#include <limits>

#include "hyplab/poincare.hpp"

using namespace hyplab;

namespace {

RateFunction pure_power(RateFunction::Kind kind, double m) {
    RateFunction rf;
    rf.kind = kind;
    rf.value = [m](double r) { return std::pow(r, -m); };
    rf.description = "r^-m";
    return rf;
}

}  // namespace

TEST_CASE("bernstein inverse: fast paths and bisection") {
    CHECK(bernstein_inverse(BernsteinFn::identity(), 3.7) == doctest::Approx(3.7));
    CHECK(bernstein_inverse(BernsteinFn(1.0, 2.0), 5.0) == doctest::Approx(2.0));
    CHECK(bernstein_inverse(BernsteinFn::stable(0.5), 3.0) == doctest::Approx(9.0));
    CHECK(std::isinf(bernstein_inverse(BernsteinFn(1.0, 1.0), 0.5)));  // below the killing rate
    CHECK(bernstein_inverse(BernsteinFn(1.0, 1.0), 1.0) == 0.0);
    // bisection path: f(lambda) = lambda + sqrt(lambda); f(4) = 6
    const BernsteinFn mixed(0, 1, LevySpec::stable(0.5));
    CHECK(bernstein_inverse(mixed, 6.0) == doctest::Approx(4.0).epsilon(1e-11));
    // bounded pure-jump function never reaches 2
    const BernsteinFn atoms(0, 0, LevySpec::from_atoms({{1.0, 1.0}}));
    CHECK(std::isinf(bernstein_inverse(atoms, 2.0)));
    CHECK(bernstein_inverse(atoms, 0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-11));
}

TEST_CASE("identity round trip: beta_id(r) = 4 beta(r/4)") {
    const RateFunction beta = power_rate(RateFunction::Kind::Super, 1.0, 2.0);
    const RateFunction tr = transform_super(beta, BernsteinFn::identity());
    // powers of two keep every intermediate exact: equality without tolerance
    for (double r : {0.125, 0.5, 1.0, 4.0, 1024.0}) CHECK(tr(r) == 4.0 * beta(r / 4.0));
    for (double r : {1e-4, 0.1, 7.0, 1e3})
        CHECK(tr(r) == doctest::Approx(4.0 * beta(r / 4.0)).epsilon(1e-15));
}

TEST_CASE("sqrt specialization identities at machine precision") {
    const BernsteinFn sqrt_f = BernsteinFn::stable(0.5);
    const RateFunction beta = power_rate(RateFunction::Kind::Super, 2.0, 1.5);
    const RateFunction beta_half = transform_super(beta, sqrt_f);
    const RateFunction alpha = power_rate(RateFunction::Kind::Weak, 1.0, 2.0);
    const RateFunction alpha_half = transform_weak(alpha, sqrt_f);
    for (int i = 0; i < 1000; ++i) {
        const double r = std::pow(10.0, -4.0 + 8.0 * i / 999.0);
        CHECK(beta_half(r) == doctest::Approx(4.0 * beta(r * r / 8.0)).epsilon(1e-13));
        CHECK(alpha_half(r) ==
              doctest::Approx(2.0 * std::sqrt(2.0 * alpha(r / 4.0))).epsilon(1e-13));
    }
}

TEST_CASE("derived closed forms") {
    // beta(r) = r^{-1}, f = sqrt: beta_f(r) = 32 r^{-2}
    const RateFunction tr = transform_super(pure_power(RateFunction::Kind::Super, 1.0),
                                            BernsteinFn::stable(0.5));
    for (double r : {0.5, 1.0, 4.0}) CHECK(tr(r) == doctest::Approx(32.0 / (r * r)).epsilon(1e-14));
    // alpha = 1, f = sqrt: alpha_f = 2 sqrt 2
    RateFunction one;
    one.kind = RateFunction::Kind::Weak;
    one.value = [](double) { return 1.0; };
    CHECK(transform_weak(one, BernsteinFn::stable(0.5))(3.0) ==
          doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
    // alpha(r) = r^{-2}, f = id: alpha_f = 64 r^{-2}
    const RateFunction aw = transform_weak(pure_power(RateFunction::Kind::Weak, 2.0),
                                           BernsteinFn::identity());
    for (double r : {0.5, 2.0}) CHECK(aw(r) == doctest::Approx(64.0 / (r * r)).epsilon(1e-14));
}

TEST_CASE("transforms preserve monotonicity on a log grid") {
    const BernsteinFn f(0, 0, LevySpec::tilted_stable(0.5, 1.0));
    const RateFunction bt = transform_super(power_rate(RateFunction::Kind::Super, 1.0, 1.0), f);
    const RateFunction at = transform_weak(power_rate(RateFunction::Kind::Weak, 1.0, 1.0), f);
    double pb = std::numeric_limits<double>::infinity(), pa = pb;
    for (int i = 0; i < 200; ++i) {
        const double r = std::pow(10.0, -3.0 + 6.0 * i / 199.0);
        const double vb = bt(r), va = at(r);
        if (std::isfinite(pb) && std::isfinite(vb)) CHECK(vb <= pb * (1 + 1e-12));
        CHECK(va <= pa * (1 + 1e-12));
        pb = vb;
        pa = va;
    }
}

TEST_CASE("exponent law: slope -m/theta") {
    for (double theta : {0.5, 0.25}) {
        for (double m : {1.0, 2.5}) {
            const RateFunction tr = transform_super(pure_power(RateFunction::Kind::Super, m),
                                                    BernsteinFn::stable(theta));
            CHECK(rate_loglog_slope(tr, 1e-6, 1e-2) ==
                  doctest::Approx(-m / theta).epsilon(0.01 / (m / theta)));
        }
    }
}

TEST_CASE("jacobi super rate") {
    const RateFunction b = jacobi_super_rate(0.5, -0.5);
    CHECK(b(1.0) == doctest::Approx(2.0));  // c (1 + 1)
    // exponent max{alpha, beta} + 1 = 1.5 in the singular part
    CHECK(b(1e-4) / b(1e-2) == doctest::Approx(std::pow(100.0, 1.5)).epsilon(1e-3));
    CHECK_THROWS(jacobi_super_rate(-0.7, 0.0));
    // composed with lambda^{1/2}: singular exponent doubles to 2(max+1)
    const RateFunction comp = transform_super(b, BernsteinFn::stable(0.5));
    CHECK(rate_loglog_slope(comp, 1e-8, 1e-6) == doctest::Approx(-3.0).epsilon(1e-2));
}

TEST_CASE("kind mismatches are rejected") {
    CHECK_THROWS(transform_super(power_rate(RateFunction::Kind::Weak, 1, 1),
                                 BernsteinFn::identity()));
    CHECK_THROWS(transform_weak(power_rate(RateFunction::Kind::Super, 1, 1),
                                BernsteinFn::identity()));
}
