"""hbar-scaling of the Born cross section in the classical limit.

The classical limit takes both actions s_p and s_phi to infinity with their
ratio (and so rho_l = pi s_p / s_phi) fixed: s_p -> lambda s_p, s_phi ->
lambda s_phi, lambda ~ 1/hbar. The classical DCS depends on rho_l alone and
does not move; the envelope of the oscillating Born DCS falls as lambda^-2.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from .classical import classical_dcs
from .errors import DomainError
from .quantum import QuantumSetup, quantum_dcs
from .units import rho_from_actions

MIN_PERIODS = 3.0
MIN_POINTS_PER_PERIOD = 20


def oscillation_period(s_p: float, theta: float) -> float:
    """Angular period of J1(2 s_p sin(theta/2))^2 near theta."""
    return math.pi / (s_p * math.cos(0.5 * theta))


def analytic_envelope(s_p: float, s_phi: float, theta: float) -> float:
    """Born DCS with J1^2 replaced by its asymptotic amplitude 2 / (pi z)."""
    x = abs(math.sin(0.5 * theta))
    return s_phi**2 / (8.0 * math.pi * s_p**3) / (math.pi * s_p * x) / x**4


def _local_maxima(setup, lo, hi, n):
    grid = np.linspace(lo, hi, n)
    vals = quantum_dcs(setup, grid)
    idx = np.nonzero((vals[1:-1] > vals[:-2]) & (vals[1:-1] >= vals[2:]))[0] + 1
    out = []
    for i in idx:
        res = optimize.minimize_scalar(
            lambda t: -quantum_dcs(setup, t),
            bounds=(grid[i - 1], grid[i + 1]), method="bounded",
            options={"xatol": 1e-12 * max(1.0, abs(grid[i]))},
        )
        t_best = res.x if -res.fun >= vals[i] else grid[i]
        out.append((float(t_best), float(max(-res.fun, vals[i]))))
    return out


def envelope_at(s_p: float, s_phi: float, theta: float, window: float | None = None,
                points_per_period: int = 64, method: str = "interp",
                forward_eps: float = 1e-3) -> float:
    """Envelope of the Born DCS at ``theta`` from its local maxima in a window.

    The window [theta - window/2, theta + window/2] must span at least three
    oscillation periods. Local maxima are located on a dense sample and refined
    with a bounded scalar search. ``method="interp"`` interpolates log(maxima)
    through the three maxima nearest ``theta`` (quadratic, exact at the nodes); ``method="max"`` returns the largest
    maximum in the window.
    """
    if not 0 < abs(theta) < math.pi:
        raise DomainError("theta must lie in (0, pi) in magnitude")
    period = oscillation_period(s_p, theta)
    if window is None:
        window = 4.0 * period
    if window < MIN_PERIODS * period * (1 - 1e-12):
        raise DomainError(
            f"window {window:g} shorter than {MIN_PERIODS:g} oscillation periods ({MIN_PERIODS * period:g})"
        )
    if points_per_period < MIN_POINTS_PER_PERIOD:
        raise DomainError(f"need >= {MIN_POINTS_PER_PERIOD} points per oscillation period")
    lo, hi = theta - 0.5 * window, theta + 0.5 * window
    if lo < forward_eps or hi > math.pi:
        raise DomainError("envelope window leaves (forward_eps, pi)")
    setup = QuantumSetup(s_p, s_phi, forward_eps)
    n = int(math.ceil(points_per_period * window / period)) + 1
    maxima = _local_maxima(setup, lo, hi, n)
    if len(maxima) < 2:
        raise DomainError("window too small to contain the J1 maxima needed for an envelope")
    if method == "max":
        return max(v for _, v in maxima)
    if method != "interp":
        raise DomainError(f"unknown envelope method {method!r}")
    # interpolate log(maxima) exactly through the three maxima nearest theta
    maxima.sort(key=lambda m: abs(m[0] - theta))
    near = maxima[:3]
    t = np.array([m[0] for m in near]) - theta
    y = np.log([m[1] for m in near])
    coef = np.polyfit(t / period, y, len(near) - 1)
    return float(math.exp(np.polyval(coef, 0.0)))


@dataclass(frozen=True)
class ScalingScan:
    rho_l: float
    theta: float
    s_p_base: float
    lambdas: np.ndarray
    s_p: np.ndarray
    s_phi: np.ndarray
    envelopes: np.ndarray

    def rows(self):
        for row in zip(self.lambdas, self.s_p, self.s_phi, self.envelopes):
            yield tuple(float(v) for v in row)

    @property
    def rho_recomputed(self) -> np.ndarray:
        return np.array([rho_from_actions(a, b) for a, b in zip(self.s_p, self.s_phi)])


@dataclass(frozen=True)
class ScalingFit:
    slope: float
    intercept: float
    max_residual: float
    n_points: int

    def summary(self) -> dict:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "max_residual": self.max_residual,
            "n_points": self.n_points,
        }


def geometric_lambdas(decades: float = 4, points_per_decade: int = 2) -> np.ndarray:
    n = int(round(decades * points_per_decade))
    return 10.0 ** (np.arange(n + 1) / points_per_decade)


def scaling_scan(rho_l: float, theta: float, s_p_base: float, lambda_grid=None,
                 workers: int = 1, **envelope_kw) -> ScalingScan:
    """Envelope of the Born DCS along s_p = lambda s_p_base at fixed rho_l and theta."""
    if not (rho_l > 0 and s_p_base > 0):
        raise DomainError("rho_l and s_p_base must be > 0")
    lambdas = geometric_lambdas() if lambda_grid is None else np.asarray(lambda_grid, dtype=np.float64)
    if lambdas.ndim != 1 or lambdas.size == 0:
        raise DomainError("lambda grid must be a non-empty 1-d sequence")
    if np.any(lambdas < 1.0) or np.any(np.diff(lambdas) <= 0):
        raise DomainError("lambdas must be strictly increasing and >= 1")
    if lambdas[0] * s_p_base * abs(math.sin(0.5 * theta)) < 10.0:
        raise DomainError("smallest lambda * s_p_base * sin(theta/2) must be >= 10 (asymptotic regime)")
    s_p = lambdas * s_p_base
    s_phi = math.pi * s_p / rho_l

    def one(i):
        return envelope_at(float(s_p[i]), float(s_phi[i]), theta, **envelope_kw)

    idx = range(lambdas.size)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            env = list(pool.map(one, idx))
    else:
        env = [one(i) for i in idx]
    return ScalingScan(rho_l, theta, s_p_base, lambdas, s_p, s_phi, np.array(env))


def fit_loglog(x, y) -> ScalingFit:
    """Ordinary least squares of log y on log x (natural logs)."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape or x.size < 2:
        raise DomainError("need matching x, y with at least two points")
    if not (np.all(np.isfinite(y)) and np.all(y > 0) and np.all(x > 0)):
        raise DomainError("log-log fit needs finite positive values")
    lx, ly = np.log(x), np.log(y)
    mx, my = lx.mean(), ly.mean()
    dx = lx - mx
    slope = float(np.dot(dx, ly - my) / np.dot(dx, dx))
    intercept = float(my - slope * mx)
    resid = ly - (intercept + slope * lx)
    return ScalingFit(slope, intercept, float(np.max(np.abs(resid))), int(x.size))


def fit_loglog_slope(scan: ScalingScan) -> ScalingFit:
    if scan.lambdas.size < 8:
        raise DomainError("scaling fit needs at least 8 scan points")
    return fit_loglog(scan.lambdas, scan.envelopes)


def classical_counterpart(scan: ScalingScan) -> np.ndarray:
    """Classical DCS at each scan point; depends on rho_l only."""
    return np.array([classical_dcs(scan.rho_l, scan.theta) for _ in scan.lambdas])


def coupling_scan(s_p: float, theta: float, s_phi_values) -> np.ndarray:
    """Born DCS at fixed s_p and theta for several flux actions."""
    return np.array([quantum_dcs(QuantumSetup(s_p, float(s)), theta) for s in s_phi_values])
