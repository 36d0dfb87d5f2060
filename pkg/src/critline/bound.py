"""Lower-bound evaluators, the (A, theta) optimizer, and large-N asymptotics.

The proportion of critical-line zeros of a linear combination of N
L-functions is bounded below by

    2 pi (1/(2A) - 4 N (c1(A) + c2) / A^3)        (general N)
    2 pi (1/(2A) - (sqrt(c1) + sqrt(c2))^2 / A^3)  (sharper, N = 1 only)

for any A > 1/kappa.  The optimizer locates the stationary A of the
chosen formula from the analytic derivative, sweeps a theta grid, and
reports the best (A*, theta*).  The asymptotic machinery packages the
same chain into the large-N constants (lambda-, lambda+, N0, ...) and
evaluates the final large-N display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize as sp_optimize

from . import constants as cst
from . import roots
from .constants import ConstantSet, Params
from .errors import DomainError, OptimizerError, PreconditionError
from .specfun import gamma_ratio_quarter

TWO_PI = 2.0 * math.pi

# N values of the reference table emitted by the table command.
DEFAULT_TABLE_N = (1, 2, 3, 4, 5, 10, 100, 1000)

# ln A search window for the stationary point: from just above 1/kappa
# out to 1e16 (the table tops out near 1e11, so this leaves headroom).
_LN_A_MAX = math.log(1e16)
_N_SCAN = 600


@dataclass(frozen=True)
class BoundReport:
    """Optimizer output for one N."""
    N: int
    A_star: float
    theta_star: float
    kappa: float
    bound: float
    method: str          # "general" or "single_L"
    n_rect: int
    theta_grid: int


@dataclass(frozen=True)
class AsymptoticSet:
    """The +/- constants of the large-N regime at one (eps, kappa)."""
    eps: float
    lambda_minus: float
    lambda_plus: float
    c5_minus: float
    c5_plus: float
    c3_plus: float
    c2_plus: float
    c4_plus: float
    k2_plus: float
    k4_plus: float
    n0: float


# ------------------------------------------------------------- evaluators

def _bound_value(A, N, ks, single: bool):
    """b(A); array-safe.  single=True uses the sharper N=1 combination."""
    c1v = cst.c1_from_set(A, ks)
    if single:
        c2v = ks.c2 if isinstance(ks, ConstantSet) else ks["c2"]
        quad = (np.sqrt(c1v) + np.sqrt(c2v)) ** 2
        return TWO_PI * (0.5 / A - quad / A ** 3)
    c2v = ks.c2 if isinstance(ks, ConstantSet) else ks["c2"]
    return TWO_PI * (0.5 / A - 4.0 * N * (c1v + c2v) / A ** 3)


def _stationarity(A, N, ks, single: bool):
    """g(A) = A^4 b'(A) / (2 pi); positive left of the maximum."""
    c1v = cst.c1_from_set(A, ks)
    c1p = cst.c1_prime_from_set(A, ks)
    c2v = ks.c2 if isinstance(ks, ConstantSet) else ks["c2"]
    if single:
        ratio = np.sqrt(c2v / c1v)
        return (-0.5 * A * A - (1.0 + ratio) * c1p * A
                + 3.0 * (np.sqrt(c1v) + np.sqrt(c2v)) ** 2)
    return -0.5 * A * A - 4.0 * N * c1p * A + 12.0 * N * (c1v + c2v)


def lower_bound_general(p: Params, n_rect: int = 100) -> float:
    """2 pi (1/(2A) - 4N (c1(A) + c2)/A^3); total on A > 1/kappa."""
    _require_window(p)
    ks = cst.k_constants(p.theta, p.kappa, n_rect)
    return float(_bound_value(p.A, p.N, ks, single=False))


def lower_bound_single(p: Params, n_rect: int = 100) -> float:
    """2 pi (1/(2A) - (sqrt(c1) + sqrt(c2))^2/A^3); N = 1 only."""
    if p.N != 1:
        raise DomainError(f"the sharper combination applies to N = 1 only, got N={p.N}")
    _require_window(p)
    ks = cst.k_constants(p.theta, p.kappa, n_rect)
    c1v = cst.c1_from_set(p.A, ks)
    if c1v < 0.0:
        raise DomainError(f"c1(A) = {c1v:g} < 0 at A = {p.A:g}; "
                          "the square-root combination is undefined here")
    return float(_bound_value(p.A, 1, ks, single=True))


def _require_window(p: Params) -> None:
    if math.isnan(p.A):
        raise DomainError("Params.A is unset")
    if not p.A > 1.0 / p.kappa:
        raise DomainError(f"bound needs A > 1/kappa = {1.0 / p.kappa:g}, got A = {p.A:g}")


# -------------------------------------------------------------- optimizer

def _optimize_A_set(N: int, kappa: float, ks) -> tuple[float, float]:
    """Stationary point of the bound for fixed constants; scalar path."""
    single = N == 1
    ln_lo = math.log(1.0 / kappa) + 1e-9
    grid = np.linspace(ln_lo, _LN_A_MAX, _N_SCAN)
    with np.errstate(invalid="ignore", over="ignore"):
        g = _stationarity(np.exp(grid), N, ks, single)
    sign = np.sign(g)
    idx = np.nonzero((sign[:-1] > 0) & (sign[1:] < 0))[0]
    best: tuple[float, float] | None = None
    for i in idx:
        sol = roots.solve_bracketed(
            lambda la: float(_stationarity(math.exp(la), N, ks, single)),
            float(grid[i]), float(grid[i + 1]), tol=1e-13)
        a_root = math.exp(sol.value)
        b_root = float(_bound_value(a_root, N, ks, single))
        if best is None or b_root > best[1]:
            best = (a_root, b_root)
    if best is None:
        raise OptimizerError(
            f"no positive stationary point of the bound for N={N} "
            f"in A within [{math.exp(ln_lo):.3g}, 1e16]")
    a_star, b_star = best
    # Local-max certificate; on failure fall back to golden section in ln A.
    if not _is_local_max(a_star, b_star, N, ks, single):
        res = sp_optimize.minimize_scalar(
            lambda la: -float(_bound_value(math.exp(la), N, ks, single)),
            bounds=(math.log(a_star) - math.log(2.0), math.log(a_star) + math.log(2.0)),
            method="bounded", options={"xatol": 1e-13, "maxiter": 200})
        a_ref = math.exp(float(res.x))
        b_ref = float(_bound_value(a_ref, N, ks, single))
        if b_ref > b_star:
            a_star, b_star = a_ref, b_ref
    return a_star, b_star


def _is_local_max(a_star, b_star, N, ks, single) -> bool:
    for factor in (1.0 - 1e-6, 1.0 + 1e-6):
        if float(_bound_value(a_star * factor, N, ks, single)) > b_star:
            return False
    return True


def optimize_A(N: int, theta: float, kappa: float = 0.125,
               n_rect: int = 100) -> tuple[float, float]:
    """Best A at fixed theta: (A_star, bound).

    Uses the sharper single-L formula when N = 1 and the general one
    otherwise, mirroring how the table is produced.
    """
    Params(N=N, theta=theta, kappa=kappa)
    ks = cst.k_constants(theta, kappa, n_rect)
    return _optimize_A_set(N, kappa, ks)


# Cached theta-grid tables keyed by (kappa, n_rect, grid size, prime cutoff);
# the constants are N-independent, so all table rows share one sweep.
_GRID_CACHE: dict[tuple, dict[str, np.ndarray]] = {}


def _theta_grid_table(kappa: float, n_rect: int, grid_size: int) -> dict[str, np.ndarray]:
    key = (float(kappa), int(n_rect), int(grid_size), cst.prime_cutoff())
    hit = _GRID_CACHE.get(key)
    if hit is not None:
        return hit
    thetas = np.arange(1, grid_size) / grid_size
    table = cst._k_table(thetas, kappa, n_rect)
    _GRID_CACHE[key] = table
    return table


def _optimize_A_vec(N: int, kappa: float, table: dict[str, np.ndarray],
                    chunk: int = 2048) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized stationary-A search across the whole theta grid.

    Returns (A_star, bound) arrays with -inf bound marking rows where no
    stationary point exists (infeasible, discarded silently).
    """
    single = N == 1
    size = table["theta"].size
    a_out = np.full(size, np.nan)
    b_out = np.full(size, -np.inf)
    ln_lo = math.log(1.0 / kappa) + 1e-9
    grid = np.linspace(ln_lo, _LN_A_MAX, _N_SCAN)
    a_grid = np.exp(grid)
    for lo in range(0, size, chunk):
        sub = {k: v[lo:lo + chunk, None] for k, v in table.items()}
        with np.errstate(invalid="ignore", over="ignore"):
            g = _stationarity(a_grid[None, :], N, sub, single)
        sign = np.sign(g)
        trans = (sign[:, :-1] > 0) & (sign[:, 1:] < 0)
        has = trans.any(axis=1)
        if not has.any():
            continue
        # last +/- transition per row (towards large A, where the max sits)
        last = trans.shape[1] - 1 - np.argmax(trans[:, ::-1], axis=1)
        rows = np.nonzero(has)[0]
        la_lo = grid[last[rows]][:, None]
        la_hi = grid[last[rows] + 1][:, None]
        subr = {k: v[rows] for k, v in sub.items()}

        def g_of(la):
            with np.errstate(invalid="ignore", over="ignore"):
                return _stationarity(np.exp(la), N, subr, single)

        la_root = roots._bisect_vec(g_of, la_lo, la_hi)
        a_root = np.exp(la_root)
        with np.errstate(invalid="ignore", over="ignore"):
            b_root = _bound_value(a_root, N, subr, single)
        a_out[lo + rows] = a_root.ravel()
        b_out[lo + rows] = b_root.ravel()
    b_out[~np.isfinite(b_out)] = -np.inf
    return a_out, b_out


def optimize(N: int, kappa: float = 0.125, theta_grid_size: int = 10000,
             n_rect: int = 100) -> BoundReport:
    """Sweep the theta grid, optimize A at each point, return the best.

    The winning grid theta gets one bounded golden-section refinement pass
    over its two neighboring cells; ties on the grid resolve to the
    smaller theta (the sweep scans ascending).
    """
    if not isinstance(theta_grid_size, (int, np.integer)) or theta_grid_size < 2:
        raise DomainError(f"theta_grid_size must be an integer >= 2, got {theta_grid_size!r}")
    Params(N=N, theta=0.5, kappa=kappa)       # validates N and kappa
    cst._check_n_rect(n_rect)
    table = _theta_grid_table(kappa, n_rect, theta_grid_size)
    _, b_vec = _optimize_A_vec(N, kappa, table)
    feasible = b_vec > 0.0
    if not feasible.any():
        raise OptimizerError(
            f"every theta grid point is infeasible for N={N}, kappa={kappa}")
    i_best = int(np.argmax(b_vec))
    theta_g = float(table["theta"][i_best])
    a_best, b_best = optimize_A(N, theta_g, kappa, n_rect)
    theta_best = theta_g

    # One golden-section refinement pass around the winning cell.
    h = 1.0 / theta_grid_size
    lo = max(theta_g - h, 1e-9)
    hi = min(theta_g + h, 1.0 - 1e-9)

    def neg_bound(theta: float) -> float:
        try:
            return -optimize_A(N, float(theta), kappa, n_rect)[1]
        except (OptimizerError, DomainError, OverflowError):
            return np.inf

    res = sp_optimize.minimize_scalar(neg_bound, bounds=(lo, hi), method="bounded",
                                      options={"xatol": h * 1e-3, "maxiter": 60})
    if np.isfinite(res.fun) and -float(res.fun) > b_best:
        theta_best = float(res.x)
        a_best, b_best = optimize_A(N, theta_best, kappa, n_rect)

    method = "single_L" if N == 1 else "general"
    return BoundReport(N=int(N), A_star=a_best, theta_star=theta_best,
                       kappa=float(kappa), bound=b_best, method=method,
                       n_rect=int(n_rect), theta_grid=int(theta_grid_size))


# ------------------------------------------------------------- asymptotics

def asymptotic_constants(eps: float, kappa: float = 0.125) -> AsymptoticSet:
    """The +/- constants of the large-N regime.

    c5- and c5+ sandwich c5(theta)/(1+eps) using rho at theta = 0 and
    theta = 1/4; lambda+/- = 128 (c5+/-)^2 K1(0); the K2+/K4+ envelopes
    drop the theta dependence, and the K2+ integral of the c6+ envelope
    is elementary, so it is evaluated in closed form.
    """
    eps = float(eps)
    if not 0.0 < eps < 1.0 / 3.0:
        raise DomainError(f"eps must lie in (0, 1/3), got {eps}")
    cst._check_kappa(kappa)
    g = gamma_ratio_quarter()
    p1 = cst._p1()
    p2 = cst._p2()
    rho0 = roots.rho_theta(0.0).value
    rho4 = roots.rho_theta(0.25).value
    c5m = (math.exp(rho0) + 1.0) / (2.0 * math.sqrt(math.pi * kappa * rho0)) * g
    c5p = ((math.exp(rho4) + math.exp(rho4 / 4.0))
           / (2.0 * math.sqrt(math.pi * kappa * rho4)) * g)
    k1_zero = p1 * (32.0 / 3.0) / math.sqrt(math.pi)
    lam_m = 128.0 * c5m * c5m * k1_zero
    lam_p = 128.0 * c5p * c5p * k1_zero
    c3p = ((1.0 / (8.0 * kappa) + 1.5)
           * ((math.exp(rho4) + math.exp(rho4 / 4.0)) * g
              / math.sqrt(math.pi * rho4)) ** 4 * p1)
    c2p = 6.0 * (c3p + 1.0 + 2.0 * math.sqrt(c3p)) / (kappa * kappa)
    c4p = 13.0 / (5.0 * math.sqrt(math.pi))
    # c6+(v) = E (s sqrt(v) + G) with E = e/sqrt(pi kappa/2), s = sqrt(2 pi kappa);
    # its K2+ integrand integrates in closed form over [0, 1/kappa].
    e_fac = math.e / math.sqrt(math.pi * kappa / 2.0)
    s_fac = math.sqrt(2.0 * math.pi * kappa)
    int_c6p_sq = e_fac * e_fac * (s_fac * s_fac / (2.0 * kappa * kappa)
                                  + (4.0 / 3.0) * s_fac * g * kappa ** -1.5
                                  + g * g / kappa)
    int_c6p = e_fac * ((2.0 / 3.0) * s_fac * kappa ** -1.5 + g / kappa)
    k2p = (kappa * p2 * ((0.5 + 2.0 * kappa) * int_c6p_sq
                         + 2.0 * c4p * math.sqrt(kappa) * int_c6p)
           + p1 * (kappa / (0.5 - 2.0 * kappa) + 256.0 / (9.0 * math.pi)))
    k4p = p1 * ((256.0 / 9.0) * (math.log(1.0 / kappa) - 1.0) / (math.pi * kappa)
                + (32.0 / 3.0) / (math.sqrt(math.pi) * kappa))
    n0 = c2p / lam_m ** 3
    return AsymptoticSet(eps=eps, lambda_minus=lam_m, lambda_plus=lam_p,
                         c5_minus=c5m, c5_plus=c5p, c3_plus=c3p, c2_plus=c2p,
                         c4_plus=c4p, k2_plus=k2p, k4_plus=k4p, n0=n0)


def asymptotic_bound(N: float, eps: float, kappa: float = 0.125) -> float:
    """The large-N lower bound at (N, eps); N must clear the N0 threshold."""
    ac = asymptotic_constants(eps, kappa)
    n = float(N)
    threshold = max(3.0, ac.n0 / eps ** 3)
    if n < threshold:
        raise PreconditionError(
            f"N = {n:g} is below the validity threshold max(3, N0/eps^3) = {threshold:g}")
    p1 = cst._p1()
    k1_zero = p1 * (32.0 / 3.0) / math.sqrt(math.pi)
    log_n = math.log(n)
    return (TWO_PI / (n * log_n)) * (
        1.0 / (4.0 * ac.lambda_plus * (1.0 + eps) ** 3)
        - math.log(log_n) / (4.0 * ac.lambda_minus * log_n)
        - (math.log(ac.lambda_plus) + 1.0 + ac.k2_plus / k1_zero)
        / (4.0 * ac.lambda_minus * log_n)
        - (ac.k4_plus / k1_zero) / (4.0 * ac.lambda_minus ** 2 * n * log_n ** 2)
        - 4.0 * eps / log_n ** 2)
