import math

import _hyplab as hl


def test_norm_values():
    fam = hl.PolyFamily.hermite()
    assert math.isclose(hl.normalized_poly_lp_norm(fam, 1, 4).to_float(), 3 ** 0.25,
                        rel_tol=1e-10)
    assert math.isclose(hl.normalized_poly_lp_norm(fam, 9, 2).to_float(), 1.0, rel_tol=1e-9)


def test_hermite_sandwich():
    r = hl.hermite_sandwich(40, 4)
    assert r.passed
    assert r.lower.logmag <= r.measured.logmag <= r.upper.logmag


def test_bernstein_and_classification():
    f = hl.BernsteinFn.from_json('{"a": 0.25, "b": 0.5}')
    assert f(2.0) == 1.25
    c = hl.classify_ou(f, 1.0, 2.0, 4.0)
    assert c.blow_up
    assert math.isclose(c.threshold_q, 1 + math.e)
    c2 = hl.classify_ou(f, 1.0, 2.0, 3.0)
    assert not c2.blow_up
    assert math.isclose(c2.log_norm, -0.25)


def test_poisson_kernel_identity():
    assert hl.poisson_kernel_identity(1.0, 2.0) < 1e-8


def test_blow_up_certificate():
    f = hl.BernsteinFn.stable(0.5)
    fam = hl.PolyFamily.hermite()
    best = max(hl.eigen_lower_bound(fam, f, 1.0, 2, 4, n).logmag for n in range(1, 31))
    assert best > math.log(1e3)


def test_fourier_identity():
    fam = hl.PolyFamily.laguerre(0.0)
    cf = hl.fourier_coefficient(fam, 12, 0.5)
    qd = hl.fourier_coefficient_quadrature(fam, 12, 0.5)
    assert cf.sign == qd.sign
    assert abs(math.expm1(qd.logmag - cf.logmag)) < 1e-10


def test_necessary_condition():
    rep = hl.multiplier_necessary_condition(
        lambda n: math.exp(-math.sqrt(n)), 0.0, 2.0, 4.0, 100)
    assert rep.first_violation is not None
    assert math.isclose(rep.threshold, 1 / 3)


def test_heat_kernel_and_ultra():
    r = hl.jacobi_heat_kernel(0.0, 0.0, 0.05, 0.3, -0.6)
    # tail bound is certified on the scale of the retained series (~1)
    assert r.tail_bound < 1e-9
    u = hl.ultra_norm_estimate(0.0, 0.0, 0.1)
    assert u.value >= r.value


def test_limits():
    assert hl.limit_residual_jacobi_to_laguerre(5, 0.0, 1e4, 1.0) < 1e-2
    cert = hl.degeneration_certificate(0.0, 1.0, 2, 4, 10.0)
    assert cert.found
    assert cert.bound.to_float() > 20.0
