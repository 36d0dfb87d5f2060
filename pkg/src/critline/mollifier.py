"""Desk-scale mollified zero detection on the critical line.

Everything here works with the rotated real function

    X(t) = exp(i * vartheta(t)) * zeta(1/2 + it),

which is real for real t, and with the Dirichlet-polynomial mollifier

    eta(t) = sum_{n <= xi} tau_{-1/2}(n) * M(n) * n^{-1/2 - it},

where M is one of two weight profiles on [1, xi]:

  * "piecewise": 1 up to xi^theta, then log(xi/x)/((1-theta) log xi)
    down to 0 at xi;
  * "selberg":   log(xi/x)/log(xi) on all of [1, xi].

Since |eta|^2 >= 0, the product X(t)*|eta(t)|^2 changes sign exactly where
X does (outside the measure-zero set where eta vanishes), while the
mollifier flattens the large excursions of X between zeros.  The module
exposes the weight, the polynomial, the rotated function, window integrals
I/J/M over [t, t+H], a sign-change zero detector over abutting windows,
and a plain tabular emitter for plotting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Dict, List, Tuple

import numpy as np

from . import specfun
from .errors import DomainError, NumericalConsistencyError, RangeError

_VARIANTS = ("piecewise", "selberg")

# Discarded imaginary part of X(t) beyond this is treated as a numerical
# inconsistency rather than rounding noise.
_IMAG_TOL = 1.0e-8


@dataclass(frozen=True)
class MollifierConfig:
    """Parameters of the mollified scan.

    xi is the polynomial length (direct, not tied to a power of the window
    height: desk-scale heights make t^{1/8} too short to show anything).
    H is the window length and quad_step the grid spacing used both for
    the window quadrature and the detection scan; quad_step=None resolves
    to H/64, which comfortably oversamples X at desk heights.
    """

    xi: float = 50.0
    theta: float = 0.5
    variant: str = "piecewise"
    t_lo: float = 0.0
    t_hi: float = 100.0
    H: float = 1.0
    quad_step: float | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.xi) and self.xi > 1.0):
            raise DomainError(f"xi must be > 1, got {self.xi}")
        if not (0.0 < self.theta < 1.0):
            raise DomainError(f"theta must lie in (0, 1), got {self.theta}")
        if self.variant not in _VARIANTS:
            raise DomainError(
                f"variant must be one of {_VARIANTS}, got {self.variant!r}")
        if not self.t_lo < self.t_hi:
            raise DomainError(
                f"need t_lo < t_hi, got [{self.t_lo}, {self.t_hi}]")
        if not (math.isfinite(self.H) and self.H > 0.0):
            raise DomainError(f"window length H must be > 0, got {self.H}")
        if self.quad_step is None:
            object.__setattr__(self, "quad_step", self.H / 64.0)
        if not (math.isfinite(self.quad_step) and self.quad_step > 0.0):
            raise DomainError(
                f"quad_step must be > 0, got {self.quad_step}")


@dataclass(frozen=True)
class WindowStats:
    """Quadrature results over one window [t, t+H].

    I = integral of X*|eta|^2, J = integral of |X|*|eta|^2, and M_val is
    the complex integral of zeta*eta^2 minus H.  J >= |I| and
    J >= H - |M_val| hold exactly at the quadrature level (positive
    Simpson weights), so a detection criterion |I| + |M| < H certifies a
    sign change without looking at J.
    """

    t: float
    H: float
    I: float
    J: float
    M_val: complex
    sign_changes: int


# ------------------------------------------------------------------ weights

def _weight_vec(x: np.ndarray, xi: float, theta: float,
                variant: str) -> np.ndarray:
    """Mollifier weight M(x) for x >= 1, vectorized; 0 beyond xi."""
    x = np.asarray(x, dtype=float)
    log_xi = math.log(xi)
    w = np.zeros(x.shape, dtype=float)
    if variant == "selberg":
        inside = x <= xi
        w[inside] = np.log(xi / x[inside]) / log_xi
        return w
    cut = xi ** theta
    w[x <= cut] = 1.0
    mid = (x > cut) & (x <= xi)
    w[mid] = np.log(xi / x[mid]) / ((1.0 - theta) * log_xi)
    return w


def mollifier_weight(x: float, cfg: MollifierConfig) -> float:
    """Weight M(x) of the configured variant; requires x >= 1."""
    x = float(x)
    if not (math.isfinite(x) and x >= 1.0):
        raise DomainError(f"mollifier weight defined for x >= 1, got {x}")
    return float(_weight_vec(np.array([x]), cfg.xi, cfg.theta, cfg.variant)[0])


# --------------------------------------------------------------- polynomial

_coef_cache: Dict[Tuple[float, float, str], Tuple[np.ndarray, np.ndarray]] = {}


def _coefficients(xi: float, theta: float,
                  variant: str) -> Tuple[np.ndarray, np.ndarray]:
    """(log n, tau_{-1/2}(n) * M(n) / sqrt(n)) for 1 <= n <= xi, cached."""
    key = (float(xi), float(theta), variant)
    hit = _coef_cache.get(key)
    if hit is not None:
        return hit
    limit = int(math.floor(xi))
    n = np.arange(1, limit + 1, dtype=float)
    tau = specfun._tau_table(limit, -0.5)[1:]
    amp = tau * _weight_vec(n, xi, theta, variant) / np.sqrt(n)
    entry = (np.log(n), amp)
    _coef_cache[key] = entry
    return entry


def _eta_vec(t: np.ndarray, cfg: MollifierConfig) -> np.ndarray:
    """eta evaluated at 1/2 + it for a vector of ordinates."""
    logn, amp = _coefficients(cfg.xi, cfg.theta, cfg.variant)
    t = np.asarray(t, dtype=float)
    flat = t.ravel()
    out = np.empty(flat.shape, dtype=complex)
    block = max(1, int(4.0e6 / max(logn.size, 1)))
    for lo in range(0, flat.size, block):
        tb = flat[lo:lo + block]
        out[lo:lo + block] = np.exp(-1j * np.outer(tb, logn)) @ amp
    return out.reshape(t.shape)


def eta(t: float, cfg: MollifierConfig) -> complex:
    """Mollifying polynomial sum_{n <= xi} tau_{-1/2}(n) M(n) n^{-1/2-it}."""
    return complex(_eta_vec(np.array([float(t)]), cfg)[0])


# ---------------------------------------------------------- rotated function

def _hardy_x_vec(t: np.ndarray) -> np.ndarray:
    """X(t) = exp(i vartheta(t)) zeta(1/2+it) for a vector of ordinates."""
    t = np.asarray(t, dtype=float)
    if t.size and float(np.max(np.abs(t))) > specfun._ZETA_T_MAX:
        raise RangeError(
            f"rotated function validated only for |t| <= "
            f"{specfun._ZETA_T_MAX:g}")
    z = np.exp(1j * specfun._theta_phase_vec(t)) * specfun._zeta_critical_vec(t)
    worst = float(np.max(np.abs(z.imag))) if z.size else 0.0
    if worst >= _IMAG_TOL:
        raise NumericalConsistencyError(
            f"rotated value has imaginary part {worst:.3e} >= {_IMAG_TOL:g}")
    return z.real


def hardy_x(t: float) -> float:
    """Real rotated value X(t); X(0) = zeta(1/2), zeros match zeta's."""
    return float(_hardy_x_vec(np.array([float(t)]))[0])


# ---------------------------------------------------------- window integrals

def _simpson_weights(lo: float, hi: float, step: float) -> Tuple[np.ndarray,
                                                                 np.ndarray]:
    """Composite-Simpson nodes and weights on [lo, hi] at spacing <= step."""
    n = max(2, int(math.ceil((hi - lo) / step)))
    if n % 2:
        n += 1
    u = lo + (hi - lo) * np.arange(n + 1) / n
    w = np.full(n + 1, 2.0)
    w[1::2] = 4.0
    w[0] = w[n] = 1.0
    w *= (hi - lo) / (3.0 * n)
    return u, w


def _grid_sign_changes(f: np.ndarray) -> int:
    """Sign changes along a sampled curve, skipping exact zeros."""
    s = np.sign(f)
    s = s[s != 0]
    if s.size < 2:
        return 0
    return int(np.count_nonzero(s[1:] != s[:-1]))


def window_integrals(t: float, cfg: MollifierConfig) -> WindowStats:
    """Simpson values of I, J and M over [t, t+H] plus grid sign changes."""
    t = float(t)
    lo, hi = t, t + cfg.H
    if max(abs(lo), abs(hi)) > specfun._ZETA_T_MAX:
        raise RangeError(
            f"window [{lo:g}, {hi:g}] leaves the validated range "
            f"|t| <= {specfun._ZETA_T_MAX:g}")
    u, w = _simpson_weights(lo, hi, cfg.quad_step)
    x = _hardy_x_vec(u)
    e = _eta_vec(u, cfg)
    eta_sq = e.real ** 2 + e.imag ** 2
    f = x * eta_sq
    zeta_u = specfun._zeta_critical_vec(u)
    m_val = complex(w @ (zeta_u * e * e)) - cfg.H
    return WindowStats(
        t=t,
        H=cfg.H,
        I=float(w @ f),
        J=float(w @ np.abs(f)),
        M_val=m_val,
        sign_changes=_grid_sign_changes(f),
    )


# ------------------------------------------------------------ zero detection

def _mollified_vec(t: np.ndarray, cfg: MollifierConfig) -> np.ndarray:
    """X(t) * |eta(t)|^2 on a vector of ordinates."""
    e = _eta_vec(t, cfg)
    return _hardy_x_vec(t) * (e.real ** 2 + e.imag ** 2)


def _refine_crossings(lo: np.ndarray, hi: np.ndarray,
                      cfg: MollifierConfig) -> np.ndarray:
    """Bisection on X*|eta|^2 over bracketing pairs, to ~1e-9 width."""
    lo = lo.copy()
    hi = hi.copy()
    f_lo = _mollified_vec(lo, cfg)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        f_mid = _mollified_vec(mid, cfg)
        go_right = (np.sign(f_mid) == np.sign(f_lo)) & (f_mid != 0.0)
        lo = np.where(go_right, mid, lo)
        f_lo = np.where(go_right, f_mid, f_lo)
        hi = np.where(go_right, hi, mid)
        if float(np.max(hi - lo)) < 1.0e-9:
            break
    return 0.5 * (lo + hi)


def detect_zeros(t_lo: float, t_hi: float,
                 cfg: MollifierConfig) -> Tuple[int, List[float]]:
    """Count sign changes of X*|eta|^2 over abutting H-windows.

    Scans each window [t_lo + kH, t_lo + (k+1)H] (the last clipped at
    t_hi) on a grid of spacing quad_step, brackets every sign change, and
    refines each by bisection.  Returns the total count and the refined
    ordinates in increasing order.  An empty range gives (0, []).
    """
    t_lo = float(t_lo)
    t_hi = float(t_hi)
    if t_hi < t_lo:
        raise RangeError(f"need t_lo <= t_hi, got [{t_lo}, {t_hi}]")
    if max(abs(t_lo), abs(t_hi)) > specfun._ZETA_T_MAX:
        raise RangeError(
            f"scan range leaves the validated range "
            f"|t| <= {specfun._ZETA_T_MAX:g}")
    if t_hi == t_lo:
        return 0, []

    bracket_lo: List[float] = []
    bracket_hi: List[float] = []
    n_windows = int(math.ceil((t_hi - t_lo) / cfg.H - 1.0e-12))
    for k in range(n_windows):
        w_lo = t_lo + k * cfg.H
        w_hi = min(w_lo + cfg.H, t_hi)
        if w_hi <= w_lo:
            break
        steps = max(1, int(math.ceil((w_hi - w_lo) / cfg.quad_step)))
        u = w_lo + (w_hi - w_lo) * np.arange(steps + 1) / steps
        f = _mollified_vec(u, cfg)
        s = np.sign(f)
        live = np.nonzero(s != 0)[0]
        if live.size < 2:
            continue
        # every bracketing interval lies strictly inside this window's
        # grid, so abutting windows cannot double-count a crossing
        flip = np.nonzero(s[live[1:]] != s[live[:-1]])[0]
        for j in flip:
            bracket_lo.append(float(u[live[j]]))
            bracket_hi.append(float(u[live[j + 1]]))

    if not bracket_lo:
        return 0, []
    ordinates = _refine_crossings(np.array(bracket_lo), np.array(bracket_hi),
                                  cfg)
    ordinates = np.sort(ordinates)
    return int(ordinates.size), [float(v) for v in ordinates]


# -------------------------------------------------------------- figure data

def figure_data(t_lo: float, t_hi: float, step: float,
                cfg: MollifierConfig) -> np.ndarray:
    """Rows (t, X, X*|eta|^2, X*|eta_sel|^2) on the grid t_lo + k*step.

    The third column uses the configured variant, the fourth the selberg
    profile at the same (xi, theta); if the configured variant is already
    selberg, the two coincide.  Row count is floor((t_hi-t_lo)/step) + 1.
    """
    t_lo = float(t_lo)
    t_hi = float(t_hi)
    step = float(step)
    if step <= 0.0 or not math.isfinite(step):
        raise RangeError(f"step must be > 0, got {step}")
    if t_hi < t_lo:
        raise RangeError(f"need t_lo <= t_hi, got [{t_lo}, {t_hi}]")
    if max(abs(t_lo), abs(t_hi)) > specfun._ZETA_T_MAX:
        raise RangeError(
            f"grid leaves the validated range |t| <= "
            f"{specfun._ZETA_T_MAX:g}")
    n_rows = int(math.floor((t_hi - t_lo) / step + 1.0e-9)) + 1
    t = t_lo + step * np.arange(n_rows)
    x = _hardy_x_vec(t)
    e = _eta_vec(t, cfg)
    e_sel = _eta_vec(t, replace(cfg, variant="selberg"))
    return np.column_stack([
        t,
        x,
        x * (e.real ** 2 + e.imag ** 2),
        x * (e_sel.real ** 2 + e_sel.imag ** 2),
    ])
