"""Lower-bound evaluation, (A, theta) optimization, large-N asymptotics."""

import dataclasses
import math

import numpy as np
import pytest

from critline import bound as bnd
from critline import constants as cst
from critline.errors import DomainError, PreconditionError

from reference_values import (
    ASYMPTOTIC,
    ASYMPTOTIC_BOUND_1E20_EPS001,
    ASYMPTOTIC_EPS,
    ASYMPTOTIC_N0_SMALL_KAPPA,
    REFERENCE_TABLE,
)

ROW_1 = REFERENCE_TABLE[0]
ROW_2 = REFERENCE_TABLE[1]


# -------------------------------------------------------- bound evaluation

def test_single_formula_at_reference_point():
    n, a, theta, _ = ROW_1
    p = cst.Params(N=n, theta=theta, A=a)
    value = bnd.lower_bound_single(p)
    # same value through the general entry dispatch
    assert value > 0.0
    assert value == pytest.approx(5.4529e-8, rel=1e-4)


def test_general_formula_at_reference_point():
    n, a, theta, _ = ROW_2
    value = bnd.lower_bound_general(cst.Params(N=n, theta=theta, A=a))
    assert value == pytest.approx(7.3772e-9, rel=1e-4)


def test_single_requires_n_equal_one():
    with pytest.raises(DomainError):
        bnd.lower_bound_single(cst.Params(N=2, theta=0.01, A=1.0e8))


def test_bound_requires_A_above_window():
    with pytest.raises(DomainError):
        bnd.lower_bound_general(cst.Params(N=2, theta=0.01, A=5.0))


def test_single_beats_general_at_n1():
    p = cst.Params(N=1, theta=0.011, A=ROW_1[1])
    assert bnd.lower_bound_single(p) >= bnd.lower_bound_general(p)


# ------------------------------------------------------------ optimization

def test_optimize_A_fixed_theta():
    n, a_ref, theta, _ = ROW_1
    a_star, b_star = bnd.optimize_A(n, theta)
    assert a_star == pytest.approx(a_ref, rel=1e-2)
    # the optimum cannot be worse than the bound at the reference A
    ref = bnd.lower_bound_single(cst.Params(N=n, theta=theta, A=a_ref))
    assert b_star >= ref - 1e-18


def test_optimize_A_stationary():
    a_star, _ = bnd.optimize_A(5, 0.0012)
    ks = cst.k_constants(0.0012)
    for factor in (0.999, 1.001):
        perturbed = float(bnd._bound_value(a_star * factor, 5, ks, False))
        assert perturbed <= float(bnd._bound_value(a_star, 5, ks, False))


def test_optimize_report_fields():
    rep = bnd.optimize(5, theta_grid_size=10000)
    assert rep.N == 5
    assert rep.method == "general"
    assert rep.kappa == 0.125
    assert rep.n_rect == 100
    assert rep.theta_grid == 10000
    # report is self-consistent: bound recomputes at (A*, theta*)
    p = cst.Params(N=5, theta=rep.theta_star, A=rep.A_star)
    assert bnd.lower_bound_general(p) == pytest.approx(rep.bound, rel=1e-12)
    with pytest.raises(dataclasses.FrozenInstanceError):
        rep.N = 7


def test_optimize_n1_uses_single_formula():
    rep = bnd.optimize(1)
    assert rep.method == "single_L"
    p = cst.Params(N=1, theta=rep.theta_star, A=rep.A_star)
    assert bnd.lower_bound_single(p) == pytest.approx(rep.bound, rel=1e-12)


def test_bound_unimodal_in_A():
    # coarse scan over the optimization window for one table row
    ks = cst.k_constants(0.0012)
    grid = np.exp(np.linspace(math.log(9.0), math.log(1.0e14), 60))
    vals = np.array([float(bnd._bound_value(a, 5, ks, False)) for a in grid])
    d = np.diff(vals)
    switches = int(np.count_nonzero(np.sign(d[1:]) != np.sign(d[:-1])))
    assert switches <= 1


# ------------------------------------------------------------- asymptotics

def test_asymptotic_frozen_values():
    a = bnd.asymptotic_constants(ASYMPTOTIC_EPS, 0.125)
    for name, want in ASYMPTOTIC.items():
        assert getattr(a, name) == pytest.approx(want, rel=1e-12), name
    small = bnd.asymptotic_constants(ASYMPTOTIC_EPS, 1e-3)
    assert small.n0 == pytest.approx(ASYMPTOTIC_N0_SMALL_KAPPA, rel=1e-12)


def test_asymptotic_ordering_and_domain():
    a = bnd.asymptotic_constants(0.01)
    assert a.c5_minus <= a.c5_plus
    assert a.lambda_minus <= a.lambda_plus
    with pytest.raises(DomainError):
        bnd.asymptotic_constants(0.5)
    with pytest.raises(DomainError):
        bnd.asymptotic_constants(0.0)


def test_asymptotic_leading_coefficient_decreasing_in_eps():
    coefs = []
    for eps in (0.01, 0.05, 0.2):
        a = bnd.asymptotic_constants(eps)
        coefs.append(2.0 * math.pi / (4.0 * a.lambda_plus * (1 + eps) ** 3))
    assert coefs[0] > coefs[1] > coefs[2]


def test_asymptotic_bound_value_and_guard():
    assert bnd.asymptotic_bound(1e20, 0.01) == pytest.approx(
        ASYMPTOTIC_BOUND_1E20_EPS001, rel=1e-12)
    with pytest.raises(PreconditionError):
        bnd.asymptotic_bound(2, 0.01)
    # just below the eps^-3-scaled threshold at small eps
    a = bnd.asymptotic_constants(1e-3)
    n_min = max(3.0, a.n0 / 1e-9)
    with pytest.raises(PreconditionError):
        bnd.asymptotic_bound(n_min * 0.5, 1e-3)
