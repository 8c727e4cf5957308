"""Independent trajectory oracles for the classical deflection function.

Units: lengths in R, speed 1, the interior field turns the velocity
counter-clockwise with angular rate 1/rho_l. The incident beam travels along
+x; a particle with impact parameter ``b`` enters the unit disk at
(-sqrt(1 - b^2), b). Straight exterior motion is not integrated.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from ._backend import BACKEND, kernels
from .classical import classical_dcs, theta_max
from .errors import DomainError, NumericalError

RNG_ALGORITHM = "numpy.PCG64+SeedSequence(spawn_key=chunk)"
CHUNK_SIZE = 1 << 20
MIN_STEPS = 16


@dataclass(frozen=True)
class Trajectory:
    rho_l: float
    b: float
    entry_point: tuple[float, float]
    exit_point: tuple[float, float]
    entry_dir: tuple[float, float]
    exit_dir: tuple[float, float]
    deflection: float
    arc_angle: float
    n_steps: int
    method: str
    path: tuple[tuple[float, float], ...] = field(default=(), repr=False)

    def summary(self) -> dict:
        return {
            "method": self.method,
            "rho_l": self.rho_l,
            "b": self.b,
            "deflection": self.deflection,
            "arc_angle": self.arc_angle,
            "n_steps": self.n_steps,
            "entry_point": list(self.entry_point),
            "exit_point": list(self.exit_point),
            "exit_dir": list(self.exit_dir),
        }

    def polyline(self, lead: float = 1.0, n_arc: int = 200) -> list[tuple[float, float]]:
        """Path through the solenoid with straight lead-in/lead-out segments."""
        ex, ey = self.entry_point
        pts = [(ex - lead, ey)]
        if self.path:
            pts.extend(self.path)
        else:
            cx, cy = ex, ey + self.rho_l
            for k in range(n_arc + 1):
                phi = self.arc_angle * k / n_arc
                # rotate (entry - centre) = (0, -rho) by phi
                pts.append((cx + self.rho_l * math.sin(phi), cy - self.rho_l * math.cos(phi)))
        xx, xy = self.exit_point
        dx, dy = self.exit_dir
        pts.append((xx + lead * dx, xy + lead * dy))
        return pts


def _check(rho_l, b):
    if not (math.isfinite(rho_l) and rho_l > 0):
        raise DomainError("rho_l must be finite and > 0")
    if not abs(b) <= 1.0:
        raise DomainError("|b| must be <= 1")


def _straight(rho_l, b, method):
    s = math.sqrt(max(0.0, 1.0 - b * b))
    return Trajectory(rho_l, b, (-s, b), (s, b), (1.0, 0.0), (1.0, 0.0), 0.0, 0.0, 0, method)


def arc_deflection(rho_l: float, b: float) -> Trajectory:
    """Exact solution: intersect the Larmor circle with the solenoid boundary.

    The Larmor centre sits a distance rho_l to the left of the entry point.
    The exit point is the mirror image of the entry point in the line through
    the origin and the centre; the swept angle is measured about the centre.
    """
    _check(rho_l, b)
    if abs(b) == 1.0:
        return _straight(rho_l, b, "arc")
    s = math.sqrt(1.0 - b * b)
    px, py = -s, b
    cx, cy = -s, b + rho_l
    norm = math.hypot(cx, cy)
    if norm == 0.0:
        return _straight(rho_l, b, "arc")
    ux, uy = cx / norm, cy / norm
    d = 2.0 * (px * ux + py * uy)
    qx, qy = d * ux - px, d * uy - py
    theta = math.atan2(qx - cx, -(qy - cy))
    if theta == -math.pi:
        theta = math.pi
    arc = theta if theta >= 0 else theta + 2.0 * math.pi
    return Trajectory(
        rho_l, b, (px, py), (qx, qy), (1.0, 0.0), (math.cos(theta), math.sin(theta)),
        theta, arc, 0, "arc",
    )


def rk4_deflection(rho_l: float, b: float, step: float = 1e-4, record_every: int = 0) -> Trajectory:
    """Fixed-step RK4 integration of the Lorentz force inside the disk.

    ``step`` is the arc angle per step (dt = step * rho_l). The exit crossing
    is refined by bisection on a partial final step until the bracketing
    interval is below 1e-13 in path length.
    """
    _check(rho_l, b)
    if not (0.0 < step <= 0.1):
        raise DomainError("step must lie in (0, 0.1] radians of arc")
    if abs(b) == 1.0:
        return _straight(rho_l, b, "rk4")
    x, y, vx, vy, t, n, path = kernels.rk4_exit(rho_l, b, step, record_every)
    if n < 0:
        raise NumericalError("RK4 exceeded the step budget without leaving the solenoid")
    if n < MIN_STEPS:
        raise NumericalError(
            f"step {step:g} too large to resolve the chord ({n} steps)",
            estimate=math.atan2(vy, vx),
        )
    theta = math.atan2(vy, vx)
    if theta == -math.pi:
        theta = math.pi
    speed = math.hypot(vx, vy)
    s = math.sqrt(1.0 - b * b)
    return Trajectory(
        rho_l, b, (-s, b), (x, y), (1.0, 0.0), (vx / speed, vy / speed),
        theta, t / rho_l, n, "rk4", tuple(path),
    )


# Monte Carlo ----------------------------------------------------------------

@dataclass(frozen=True)
class DcsHistogram:
    rho_l: float
    bin_edges: np.ndarray
    counts: np.ndarray
    n_samples: int
    rng_seed: int
    rng_algorithm: str = RNG_ALGORITHM
    backend: str = BACKEND

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.bin_edges)

    @property
    def centers(self) -> np.ndarray:
        return 0.5 * (self.bin_edges[1:] + self.bin_edges[:-1])

    @property
    def dcs_estimate(self) -> np.ndarray:
        """2 * count / (N * width): flux per unit angle in units of R."""
        return 2.0 * self.counts / (self.n_samples * self.widths)

    def rows(self):
        est = self.dcs_estimate
        for i in range(self.counts.size):
            yield (float(self.bin_edges[i]), float(self.bin_edges[i + 1]), int(self.counts[i]), float(est[i]))


def _chunk_counts(rho_l, seed, chunk, size, n_bins):
    ss = np.random.SeedSequence(seed, spawn_key=(chunk,))
    rng = np.random.Generator(np.random.PCG64(ss))
    b = rng.uniform(-1.0, 1.0, size)
    return kernels.mc_counts(rho_l, b, n_bins)


def monte_carlo_dcs(rho_l: float, n_samples: int, n_bins: int, rng_seed: int,
                    workers: int = 1, chunk_size: int = CHUNK_SIZE) -> DcsHistogram:
    """Histogram of exact arc deflections for a uniform beam of impact parameters.

    Samples are split into fixed chunks, each with its own child seed, so the
    histogram does not depend on ``workers``.
    """
    if not (math.isfinite(rho_l) and rho_l > 0):
        raise DomainError("rho_l must be finite and > 0")
    if n_samples < 10_000:
        raise DomainError("n_samples must be >= 1e4")
    if n_bins < 8:
        raise DomainError("n_bins must be >= 8")
    if rng_seed < 0:
        raise DomainError("rng_seed must be non-negative")
    jobs = []
    start = 0
    chunk = 0
    while start < n_samples:
        size = min(chunk_size, n_samples - start)
        jobs.append((chunk, size))
        start += size
        chunk += 1
    counts = np.zeros(n_bins, dtype=np.int64)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for c in pool.map(lambda j: _chunk_counts(rho_l, rng_seed, j[0], j[1], n_bins), jobs):
                counts += c
    else:
        for c, size in jobs:
            counts += _chunk_counts(rho_l, rng_seed, c, size, n_bins)
    edges = np.linspace(-math.pi, math.pi, n_bins + 1)
    return DcsHistogram(rho_l, edges, counts, int(n_samples), int(rng_seed))


# comparison against the analytic DCS ------------------------------------------

_GL_X, _GL_W = np.polynomial.legendre.leggauss(8)


def bin_average_dcs(rho_l: float, lo: float, hi: float) -> float:
    """Mean of the classical DCS over [lo, hi] (8-point Gauss-Legendre)."""
    mid, half = 0.5 * (hi + lo), 0.5 * (hi - lo)
    total = 0.0
    for xg, wg in zip(_GL_X, _GL_W):
        total += wg * classical_dcs(rho_l, mid + half * xg)
    return 0.5 * total


@dataclass(frozen=True)
class BinComparison:
    theta_lo: float
    theta_hi: float
    analytic: float
    mc: float
    count: int
    expected: float
    sigma_deviation: float


@dataclass(frozen=True)
class ComparisonReport:
    rho_l: float
    n_samples: int
    bins: tuple[BinComparison, ...]
    frac_within_2sigma: float
    all_within_4sigma: bool
    max_abs_sigma: float
    chi2: float
    chi2_pvalue: float

    @property
    def passed(self) -> bool:
        return self.frac_within_2sigma >= 0.95 and self.all_within_4sigma

    def summary(self) -> dict:
        return {
            "rho_l": self.rho_l,
            "n_samples": self.n_samples,
            "n_bins_compared": len(self.bins),
            "frac_within_2sigma": self.frac_within_2sigma,
            "all_within_4sigma": self.all_within_4sigma,
            "max_abs_sigma": self.max_abs_sigma,
            "chi2": self.chi2,
            "chi2_dof": len(self.bins),
            "chi2_pvalue": self.chi2_pvalue,
            "passed": self.passed,
        }


def compare_histogram(hist: DcsHistogram, margin_bins: int = 3) -> ComparisonReport:
    """Bin-by-bin Poisson comparison of a histogram with the classical DCS.

    Only bins inside the attainable angular range and at least ``margin_bins``
    bin widths away from the forward direction, the range ends and the fold
    caustic take part.
    """
    rho = hist.rho_l
    width = float(np.max(hist.widths))
    margin = margin_bins * width
    if rho < 1.0:
        lo_range, hi_range, cuts = -math.pi, math.pi, (0.0,)
    else:
        lo_range, hi_range, cuts = 0.0, theta_max(rho), ()
    rows = []
    for i in range(hist.counts.size):
        lo, hi = float(hist.bin_edges[i]), float(hist.bin_edges[i + 1])
        if lo < lo_range + margin or hi > hi_range - margin:
            continue
        if any(lo - margin < c < hi + margin for c in cuts):
            continue
        analytic = bin_average_dcs(rho, lo, hi)
        expected = 0.5 * hist.n_samples * analytic * (hi - lo)
        count = int(hist.counts[i])
        dev = (count - expected) / math.sqrt(expected)
        rows.append(BinComparison(lo, hi, analytic, float(hist.dcs_estimate[i]), count, expected, dev))
    if not rows:
        raise DomainError("no bins satisfy the comparison margin")
    devs = np.array([abs(r.sigma_deviation) for r in rows])
    chi2 = float(np.sum(devs**2))
    return ComparisonReport(
        rho, hist.n_samples, tuple(rows),
        float(np.mean(devs <= 2.0)), bool(np.all(devs <= 4.0)), float(devs.max()),
        chi2, float(stats.chi2.sf(chi2, len(rows))),
    )


def pooled_fraction_within(reports, n_sigma: float = 2.0) -> float:
    """Fraction of compared bins, pooled over several reports, within n_sigma."""
    devs = [abs(b.sigma_deviation) for r in reports for b in r.bins]
    return float(np.mean(np.array(devs) <= n_sigma))
