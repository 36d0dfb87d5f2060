"""Special-function layer: primes, tau_z, Euler products, zeta, Delta_r."""

import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critline import specfun
from critline.errors import DomainError, RangeError

from reference_values import EULER_P1, EULER_P2, GAMMA_RATIO, ZETA_HALF

mp.mp.dps = 30


# ------------------------------------------------------------------- primes

def test_primes_small():
    assert specfun.primes_up_to(20).tolist() == [2, 3, 5, 7, 11, 13, 17, 19]
    assert specfun.primes_up_to(2).tolist() == [2]
    assert specfun.primes_up_to(1).size == 0


def test_primes_cached_array_is_readonly():
    arr = specfun.primes_up_to(100)
    with pytest.raises(ValueError):
        arr[0] = 9


# -------------------------------------------------------------------- tau_z

def test_tau_values():
    assert specfun.tau_z(1, -0.5) == 1.0
    for p in (2, 3, 5, 97):
        assert specfun.tau_z(p, -0.5) == -0.5
    assert specfun.tau_z(4, -0.5) == pytest.approx(-0.125, rel=1e-15)
    # multiplicative split 12 = 4 * 3
    assert specfun.tau_z(12, -0.5) == pytest.approx(
        specfun.tau_z(4, -0.5) * specfun.tau_z(3, -0.5), rel=1e-15)


def test_tau_domain():
    with pytest.raises(DomainError):
        specfun.tau_z(0, -0.5)
    with pytest.raises(DomainError):
        specfun.tau_z(-3, -0.5)


def test_tau_table_matches_pointwise():
    table = specfun._tau_table(500, -0.5)
    for n in range(1, 501):
        assert table[n] == pytest.approx(specfun.tau_z(n, -0.5), abs=1e-15)


def test_tau_bounded_by_one():
    table = specfun._tau_table(5000, -0.5)
    assert float(np.max(np.abs(table[1:]))) <= 1.0


@settings(derandomize=True, max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=400),
       st.integers(min_value=1, max_value=400))
def test_tau_multiplicative(m, n):
    if math.gcd(m, n) != 1:
        return
    assert specfun.tau_z(m * n, -0.5) == pytest.approx(
        specfun.tau_z(m, -0.5) * specfun.tau_z(n, -0.5), abs=1e-14)


# ------------------------------------------------------------- Gamma / phase

def test_gamma_ratio_against_mpmath():
    oracle = float(mp.gamma(0.25) / mp.gamma(0.75))
    assert specfun.gamma_ratio_quarter() == pytest.approx(oracle, rel=1e-13)
    assert specfun.gamma_ratio_quarter() == pytest.approx(GAMMA_RATIO,
                                                          rel=1e-15)


def test_special_constants_record():
    sc = specfun.special_constants()
    assert sc.gamma_ratio == specfun.gamma_ratio_quarter()


def test_theta_phase_against_mpmath():
    assert specfun.theta_phase(0.0) == 0.0
    for t in (1.0, 10.0, 100.0, 500.0, 1.0e4):
        oracle = float(mp.siegeltheta(t))
        assert specfun.theta_phase(t) == pytest.approx(oracle, abs=1e-10)


def test_theta_phase_odd():
    for t in (0.7, 14.1, 333.0):
        assert specfun.theta_phase(-t) == pytest.approx(
            -specfun.theta_phase(t), abs=1e-12)


# --------------------------------------------------------------------- zeta

def test_zeta_critical_against_mpmath():
    for t in (0.0, 1.0, 14.134725, 100.0, 1234.5, 9999.0):
        oracle = complex(mp.zeta(mp.mpc(0.5, t)))
        assert specfun.zeta_critical(t) == pytest.approx(oracle, abs=1e-8)


def test_zeta_critical_at_zero():
    assert specfun.zeta_critical(0.0).real == pytest.approx(ZETA_HALF,
                                                            rel=1e-12)


def test_zeta_critical_conjugate():
    z = specfun.zeta_critical(50.0)
    assert specfun.zeta_critical(-50.0) == pytest.approx(z.conjugate(),
                                                         abs=1e-12)


def test_zeta_critical_range():
    with pytest.raises(RangeError):
        specfun.zeta_critical(1.5e4)


# ----------------------------------------------------------- Euler products

def test_euler_product_exact_small_cutoffs():
    assert specfun.euler_product("P1", 2).value == pytest.approx(4.5,
                                                                 rel=1e-15)
    assert specfun.euler_product("P1", 3).value == pytest.approx(8.0625,
                                                                 rel=1e-15)


def test_euler_product_frozen_values():
    assert specfun.euler_product("P1", 10 ** 6).value == pytest.approx(
        EULER_P1, rel=1e-13)
    assert specfun.euler_product("P2", 10 ** 6).value == pytest.approx(
        EULER_P2, rel=1e-13)


def test_euler_product_record_fields():
    rec = specfun.euler_product("P2", 10 ** 4)
    assert rec.kind == "P2"
    assert rec.cutoff == 10 ** 4
    assert rec.tail_bound > 0.0


def test_euler_tail_bound_decreases():
    tails = [specfun.euler_product("P1", c).tail_bound
             for c in (10 ** 3, 10 ** 4, 10 ** 5)]
    assert tails[0] > tails[1] > tails[2]


def test_euler_product_domain():
    with pytest.raises(DomainError):
        specfun.euler_product("P3", 100)
    with pytest.raises(DomainError):
        specfun.euler_product("P1", 1)


def test_tail_majorant_decreasing_symbolically():
    # the tail bound rests on g(x) = x^2 * term(x) decreasing for x > 1;
    # check symbolically that g' has no critical point past 1 and that the
    # published euler_product tail equals g(cutoff+1)/cutoff
    import sympy as sp

    x = sp.symbols("x", positive=True)
    g_p1 = x * (3 * x ** 2 - 3 * x + 1) / (x - 1) ** 3
    g_p2 = (x ** 2 * (5 * x ** 5 - 6 * x ** 4 + 5 * x ** 2 - 4 * x + 1)
            / ((x - 1) ** 5 * x * (x + 1)))
    for kind, g, lim in (("P1", g_p1, 3), ("P2", g_p2, 5)):
        dg = sp.simplify(sp.diff(g, x))
        numer, _ = sp.fraction(sp.together(dg))
        real_roots = [r for r in sp.real_roots(sp.Poly(numer, x))]
        assert all(float(r) < 1.0 for r in real_roots)
        assert float(dg.subs(x, 2)) < 0.0
        assert sp.limit(g, x, sp.oo) == lim
        cutoff = 1000
        rec = specfun.euler_product(kind, cutoff)
        assert rec.tail_bound * cutoff == pytest.approx(
            float(g.subs(x, cutoff + 1)), rel=1e-12)


# ------------------------------------------------------------------ Delta_r

def _delta_oracle(x, r):
    """Direct mpmath quadrature of the u-substituted integral."""
    x = mp.mpf(x)
    sx = mp.sqrt(x)
    if r == 1:
        head = -2 / sx
        f = lambda u: 2 * (mp.expj(-u * u) - 1) / u ** 2
    elif r == 2:
        head = -4 * sx
        f = lambda u: 2 * (x - u * u) * (mp.expj(-u * u) - 1) / u ** 2
    else:
        head = -mp.mpf(8) / 3 * x ** mp.mpf(1.5)
        f = lambda u: (x - u * u) ** 2 * (mp.expj(-u * u) - 1) / u ** 2
    return complex(head + mp.quad(f, [1e-12, sx]))


@pytest.mark.parametrize("x,r", [(0.5, 2), (3.0, 2), (0.5, 3), (7.0, 1)])
def test_delta_r_against_quadrature(x, r):
    assert specfun.delta_r(x, r) == pytest.approx(_delta_oracle(x, r),
                                                  abs=5e-7)


def test_delta_r_at_zero():
    assert specfun.delta_r(0.0, 2) == 0j
    assert specfun.delta_r(0.0, 3) == 0j


def test_delta_r_domain():
    with pytest.raises(DomainError):
        specfun.delta_r(0.0, 1)      # integral diverges at the origin
    with pytest.raises(DomainError):
        specfun.delta_r(-1.0, 2)
    with pytest.raises(DomainError):
        specfun.delta_r(1.0, 4)


def test_delta_3_is_integral_of_delta_2():
    # Delta_3(X) = int_0^X Delta_2; tanh-sinh handles the sqrt kink at 0
    integral = complex(mp.quad(lambda x: specfun.delta_r(float(x), 2),
                               [0.0, 2.0]))
    assert specfun.delta_r(2.0, 3) == pytest.approx(integral, abs=1e-5)
