"""The constant chain feeding the lower bound.

Everything downstream of the two Euler products and the roots rho_theta,
rho(a, theta) is assembled here: c3, c2, c4, c5, the u-dependent c6 and
c7, the two rectangle quadratures of c7 over [0, 1/kappa], the four K
constants, and finally c1(A).

Conventions fixed once for the whole package: natural logarithm
throughout, kappa defaults to 1/8 (the supremum of the admissible range),
and the c7 integrals use right-endpoint rectangles.  Since c7 and v*c7
are increasing, right sums over-estimate, which keeps the resulting
bound conservative; the left sums are also computed so the quadrature
bracket can be reported.

The scalar operations are the contract surface.  The _k_table /
_c7_profile kernels are the same formulas vectorized over a theta grid;
the optimizer uses them to sweep 10^4 grid points in seconds.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from . import roots
from .errors import BracketingError, DomainError
from .specfun import euler_product, gamma_ratio_quarter

_SQRT_PI = math.sqrt(math.pi)


def prime_cutoff() -> int:
    """Euler-product prime cutoff: CRITLINE_PRIME_CUTOFF or 10^6."""
    raw = os.environ.get("CRITLINE_PRIME_CUTOFF", "").strip()
    if not raw:
        return 10 ** 6
    try:
        value = int(float(raw))
    except ValueError as exc:
        raise DomainError(f"CRITLINE_PRIME_CUTOFF is not a number: {raw!r}") from exc
    if value < 2:
        raise DomainError(f"CRITLINE_PRIME_CUTOFF must be >= 2, got {value}")
    return value


def _p1() -> float:
    return euler_product("P1", prime_cutoff()).value


def _p2() -> float:
    return euler_product("P2", prime_cutoff()).value


# -------------------------------------------------------------------- Params

@dataclass(frozen=True)
class Params:
    """The tuple (N, theta, kappa, A) parameterizing every bound formula.

    A must additionally exceed 1/kappa wherever a bound is evaluated; that
    check belongs to the bound evaluators, not the container (A defaults
    to NaN for optimizer flows that have not chosen it yet).
    """
    N: int
    theta: float
    kappa: float = 0.125
    A: float = float("nan")

    def __post_init__(self):
        if not isinstance(self.N, (int, np.integer)) or isinstance(self.N, bool):
            raise DomainError(f"N must be an integer, got {self.N!r}")
        if self.N < 1:
            raise DomainError(f"N must be >= 1, got {self.N}")
        _check_theta(self.theta)
        _check_kappa(self.kappa)
        if not math.isnan(self.A) and not self.A > 0.0:
            raise DomainError(f"A must be positive, got {self.A}")


@dataclass(frozen=True)
class ConstantSet:
    """Computed constants at one (theta, kappa), with quadrature metadata."""
    c2: float
    c3: float
    c4: float
    c5: float
    k1: float
    k2: float
    k3: float
    k4: float
    int_c7: float
    int_vc7: float
    quad_bracket: float
    rho: float


def _check_theta(theta: float) -> None:
    if not 0.0 < theta < 1.0:
        raise DomainError(f"theta must lie in (0,1), got {theta!r}")


def _check_kappa(kappa: float) -> None:
    if not 0.0 < kappa <= 0.125:
        raise DomainError(f"kappa must lie in (0, 1/8], got {kappa!r}")


def _check_n_rect(n_rect: int) -> None:
    if not isinstance(n_rect, (int, np.integer)) or n_rect < 1:
        raise DomainError(f"n_rect must be a positive integer, got {n_rect!r}")


# ------------------------------------------------- formula kernels (array-ok)

def _c5_from_rho(rho, theta, kappa, g):
    return ((np.exp(rho) + np.exp(rho * theta))
            / ((1.0 - theta) * 2.0 * np.sqrt(math.pi * kappa * rho)) * g)


def _c3_from_rho(rho, theta, kappa, g, p1):
    inner = ((np.exp(rho) + np.exp(rho * theta)) * g
             / ((1.0 - theta) * np.sqrt(rho * math.pi)))
    return (1.0 / (8.0 * kappa) + 1.5) * inner ** 4 * p1


def _c2_from_c3(v3, theta, kappa):
    return 6.0 * (v3 + 1.0 + 2.0 * np.sqrt(v3)) / (theta * kappa) ** 2


def _c4_closed(theta):
    inner = np.minimum(
        np.maximum(1.0, np.abs(1.0 - 4.0 * theta)) + 3.0 * theta * np.sqrt(theta),
        1.0 - theta + 3.0 * theta * np.sqrt(1.0 - theta))
    block = np.maximum(3.0 * np.sqrt(1.0 - theta), inner)
    return ((9.0 * (1.0 + theta ** 2.5) / 5.0 + 2.0 * block)
            / (3.0 * (1.0 - theta) * _SQRT_PI))


def _k_from_parts(theta, kappa, int_c7, int_vc7, p1, p2):
    """K1..K4 from the quadratures; works on scalars and arrays alike."""
    one_m = 1.0 - theta
    lk = math.log(kappa)
    k1 = p1 * (32.0 / 3.0) / (_SQRT_PI * one_m)
    k2 = (kappa * p2 * int_c7
          + p1 * (kappa / (0.5 - 2.0 * kappa)
                  + (256.0 / 9.0) / (one_m * one_m * math.pi)
                  + (32.0 / 3.0) * (lk - kappa) / (_SQRT_PI * one_m)))
    k3 = -p1 * (256.0 / 9.0) / (one_m * one_m * math.pi * kappa)
    k4 = (-kappa * p2 * int_vc7
          + p1 * ((4.0 * kappa - 0.5) / (0.5 - 2.0 * kappa) ** 2
                  - (256.0 / 9.0) * (1.0 + lk) / (one_m * one_m * math.pi * kappa)
                  + (32.0 / 3.0) / (_SQRT_PI * one_m * kappa)))
    return k1, k2, k3, k4


# ------------------------------------------------------------- scalar chain

def c5(theta: float, kappa: float = 0.125) -> float:
    """(1/(1-theta)) (e^rho + e^{rho theta}) / (2 sqrt(pi kappa rho)) * G."""
    _check_theta(theta)
    _check_kappa(kappa)
    rho = roots.rho_theta(theta).value
    return float(_c5_from_rho(rho, theta, kappa, gamma_ratio_quarter()))


def c3(theta: float, kappa: float = 0.125) -> float:
    """(1/(8 kappa) + 3/2) [ (e^rho + e^{rho theta}) G / ((1-theta) sqrt(rho pi)) ]^4 P1."""
    _check_theta(theta)
    _check_kappa(kappa)
    rho = roots.rho_theta(theta).value
    value = float(_c3_from_rho(rho, theta, kappa, gamma_ratio_quarter(), _p1()))
    if not math.isfinite(value):
        raise OverflowError(f"c3 overflows at theta={theta} (diverges as theta -> 1)")
    return value


def c2(theta: float, kappa: float = 0.125) -> float:
    """6 (c3 + 1 + 2 sqrt(c3)) / (theta kappa)^2."""
    return float(_c2_from_c3(c3(theta, kappa), theta, kappa))


def c4(theta: float) -> float:
    """Closed form with the nested max/min of the mollifier corollary."""
    _check_theta(theta)
    return float(_c4_closed(float(theta)))


def c6(u: float, theta: float, kappa: float = 0.125) -> float:
    """Perturbed variant of c5 at window position u (the role of v log T).

    rho solves the perturbed root equation at a = sqrt(pi kappa u); at
    u = 0 this collapses to c5.
    """
    _check_theta(theta)
    _check_kappa(kappa)
    u = float(u)
    if u < 0.0:
        raise DomainError(f"c6 needs u >= 0, got {u}")
    a = math.sqrt(math.pi * kappa * u)
    rho = roots.rho_lemma_a(a, theta).value
    g = gamma_ratio_quarter()
    return ((math.exp(rho) + math.exp(rho * theta))
            / ((1.0 - theta) * 2.0 * math.sqrt(math.pi * kappa * rho))
            * (math.sqrt(u / rho) * math.sqrt(math.pi * kappa) + g))


def c7(u: float, theta: float, kappa: float = 0.125) -> float:
    """(1/2 + 2 kappa) c6(u)^2 + 2 c4 c6(u) sqrt(kappa)."""
    v6 = c6(u, theta, kappa)
    return (0.5 + 2.0 * kappa) * v6 * v6 + 2.0 * c4(theta) * v6 * math.sqrt(kappa)


# ---------------------------------------------------------- vector kernels

def _rho_theta_vec(thetas: np.ndarray) -> np.ndarray:
    f = roots._rho_theta_equation(thetas)
    lo = np.full(np.shape(thetas), 0.5)
    hi = np.ones(np.shape(thetas))
    return roots._bisect_vec(f, lo, hi)


def _rho_lemma_vec(a, theta) -> np.ndarray:
    b = gamma_ratio_quarter()
    f = roots._rho_lemma_equation(a, theta, b)
    shape = np.broadcast_shapes(np.shape(a), np.shape(theta))
    lo = np.full(shape, 1e-8)
    hi = np.ones(shape)
    fh = f(hi)
    while np.any(fh <= 0.0):
        hi = np.where(fh <= 0.0, hi * 2.0, hi)
        if float(np.max(hi)) > 1e3:
            raise BracketingError("perturbed-root bracket expansion exceeded 1e3")
        fh = f(hi)
    return roots._bisect_vec(f, lo, hi)


def _c7_profile(theta, kappa: float, us: np.ndarray) -> np.ndarray:
    """c7 on a grid of u values; theta may be a scalar or a vector of rows."""
    theta = np.asarray(theta, dtype=float)
    th = theta[..., None] if theta.ndim else theta
    a = np.sqrt(math.pi * kappa * us)
    rho = _rho_lemma_vec(a, th)
    g = gamma_ratio_quarter()
    v6 = ((np.exp(rho) + np.exp(rho * th))
          / ((1.0 - th) * 2.0 * np.sqrt(math.pi * kappa * rho))
          * (np.sqrt(us / rho) * math.sqrt(math.pi * kappa) + g))
    v4 = _c4_closed(theta)
    v4 = v4[..., None] if theta.ndim else v4
    return (0.5 + 2.0 * kappa) * v6 * v6 + 2.0 * v4 * v6 * math.sqrt(kappa)


# ------------------------------------------------------------- quadratures

def integrate_c7(theta: float, kappa: float = 0.125,
                 n_rect: int = 100) -> tuple[float, float, float]:
    """Rectangle quadratures of c7 and v*c7 over [0, 1/kappa].

    Returns (int_c7, int_vc7, quad_bracket): right-endpoint sums for both
    integrals (upper bounds, the integrands being increasing) and the
    right-minus-left gap for the first.
    """
    _check_theta(theta)
    _check_kappa(kappa)
    _check_n_rect(n_rect)
    hi = 1.0 / kappa
    h = hi / n_rect
    us = np.linspace(0.0, hi, n_rect + 1)
    vals = _c7_profile(float(theta), kappa, us)
    right = h * float(np.sum(vals[1:]))
    left = h * float(np.sum(vals[:-1]))
    right_v = h * float(np.sum(us[1:] * vals[1:]))
    return right, right_v, right - left


def k_constants(theta: float, kappa: float = 0.125,
                n_rect: int = 100) -> ConstantSet:
    """Assemble the four K constants and their ingredients at (theta, kappa)."""
    _check_theta(theta)
    _check_kappa(kappa)
    int_c7, int_vc7, quad_bracket = integrate_c7(theta, kappa, n_rect)
    k1, k2, k3, k4 = _k_from_parts(float(theta), kappa, int_c7, int_vc7,
                                   _p1(), _p2())
    return ConstantSet(
        c2=c2(theta, kappa), c3=c3(theta, kappa), c4=c4(theta),
        c5=c5(theta, kappa), k1=float(k1), k2=float(k2), k3=float(k3),
        k4=float(k4), int_c7=int_c7, int_vc7=int_vc7,
        quad_bracket=quad_bracket, rho=roots.rho_theta(theta).value)


def _k_table(thetas: np.ndarray, kappa: float = 0.125, n_rect: int = 100,
             chunk: int = 2048) -> dict[str, np.ndarray]:
    """Vectorized k_constants over a whole theta grid.

    Returns arrays keyed like the ConstantSet fields.  Row i holds the
    constants at thetas[i]; the perturbed-root grids are solved by
    elementwise bisection, so a 10^4-point sweep costs seconds, not
    minutes.
    """
    thetas = np.asarray(thetas, dtype=float)
    if thetas.ndim != 1 or thetas.size == 0:
        raise DomainError("theta grid must be a nonempty 1-d array")
    if float(thetas.min()) <= 0.0 or float(thetas.max()) >= 1.0:
        raise DomainError("theta grid must lie inside (0,1)")
    _check_kappa(kappa)
    _check_n_rect(n_rect)
    p1, p2 = _p1(), _p2()
    g = gamma_ratio_quarter()
    hi = 1.0 / kappa
    h = hi / n_rect
    us = np.linspace(0.0, hi, n_rect + 1)
    size = thetas.size
    int_c7 = np.empty(size)
    int_vc7 = np.empty(size)
    quad_bracket = np.empty(size)
    for lo in range(0, size, chunk):
        block = thetas[lo:lo + chunk]
        prof = _c7_profile(block, kappa, us)
        int_c7[lo:lo + chunk] = h * prof[:, 1:].sum(axis=1)
        quad_bracket[lo:lo + chunk] = h * (prof[:, -1] - prof[:, 0])
        int_vc7[lo:lo + chunk] = h * (us[1:] * prof[:, 1:]).sum(axis=1)
    rho = _rho_theta_vec(thetas)
    c5v = _c5_from_rho(rho, thetas, kappa, g)
    c3v = _c3_from_rho(rho, thetas, kappa, g, p1)
    c2v = _c2_from_c3(c3v, thetas, kappa)
    c4v = _c4_closed(thetas)
    k1, k2, k3, k4 = _k_from_parts(thetas, kappa, int_c7, int_vc7, p1, p2)
    return {"theta": thetas, "rho": rho, "c2": c2v, "c3": c3v, "c4": c4v,
            "c5": c5v, "k1": k1, "k2": k2, "k3": k3, "k4": k4,
            "int_c7": int_c7, "int_vc7": int_vc7, "quad_bracket": quad_bracket}


def c1(A: float, theta: float, kappa: float = 0.125, n_rect: int = 100) -> float:
    """8 c5^2 (K1 A ln A + K2 A + K3 ln A + K4), natural log, A > 1."""
    A = float(A)
    if A <= 1.0:
        raise DomainError(f"c1 needs A > 1 (log changes sign), got {A}")
    ks = k_constants(theta, kappa, n_rect)
    return float(c1_from_set(A, ks))


def c1_from_set(A, ks):
    """c1(A) from precomputed constants (A may be an array; ks a ConstantSet
    or a dict of grid arrays aligned with A)."""
    k1, k2, k3, k4, v5 = _unpack(ks)
    logA = np.log(A)
    return 8.0 * v5 ** 2 * (k1 * A * logA + k2 * A + k3 * logA + k4)


def c1_prime_from_set(A, ks):
    """d/dA of c1 from precomputed constants."""
    k1, k2, k3, _k4, v5 = _unpack(ks)
    logA = np.log(A)
    return 8.0 * v5 ** 2 * (k1 * (logA + 1.0) + k2 + k3 / A)


def _unpack(ks):
    if isinstance(ks, ConstantSet):
        return ks.k1, ks.k2, ks.k3, ks.k4, ks.c5
    return ks["k1"], ks["k2"], ks["k3"], ks["k4"], ks["c5"]
