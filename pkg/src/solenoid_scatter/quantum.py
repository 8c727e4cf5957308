"""First-order (Born) and Aharonov-Bohm cross sections, in units of R.

With x = |sin(theta/2)| the Born result reads

    dsigma/dtheta = (1 / 8 pi) (s_phi^2 / s_p^3) (J1(2 s_p x) / x^2)^2

and the zero-radius Aharonov-Bohm result, with hbar/p = R/s_p,

    dsigma/dtheta = sin^2(s_phi / 2) / (2 pi s_p x^2).

Both are even in theta and diverge in the forward direction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import optimize

from .bessel import j0, j1, j1_zero
from .classical import AngleGrid, DcsCurve
from .errors import DomainError, ForwardSingularity, NumericalError

DEFAULT_FORWARD_EPS = 1e-3


@dataclass(frozen=True)
class QuantumSetup:
    s_p: float
    s_phi: float
    forward_eps: float = DEFAULT_FORWARD_EPS

    def __post_init__(self):
        for name in ("s_p", "s_phi"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be finite and > 0, got {v!r}")
        if not 0.0 < self.forward_eps < 0.1:
            raise DomainError("forward_eps must lie in (0, 0.1)")


def _half_sine(setup: QuantumSetup, theta):
    th = np.asarray(theta, dtype=np.float64)
    if np.any(~np.isfinite(th)) or np.any(np.abs(th) > math.pi):
        raise DomainError("theta must lie in [-pi, pi]")
    if np.any(np.abs(th) < setup.forward_eps):
        raise ForwardSingularity(
            f"|theta| < forward_eps={setup.forward_eps:g}: the cross section diverges as theta^-2"
        )
    return np.abs(np.sin(0.5 * th))


def _scalar_or_array(theta, out):
    return float(out) if np.ndim(theta) == 0 else out


def born_amplitude(setup: QuantumSetup, theta):
    """Signed J1(2 s_p x) / x^2; the Born DCS is proportional to its square."""
    x = _half_sine(setup, theta)
    return _scalar_or_array(theta, j1(2.0 * setup.s_p * x) / (x * x))


def quantum_dcs(setup: QuantumSetup, theta):
    """Born differential cross section in units of R (scalar or array theta)."""
    x = _half_sine(setup, theta)
    amp = j1(2.0 * setup.s_p * x) / (x * x)
    pref = setup.s_phi**2 / (8.0 * math.pi * setup.s_p**3)
    return _scalar_or_array(theta, pref * amp * amp)


def ab_dcs(setup: QuantumSetup, theta):
    """Aharonov-Bohm differential cross section in units of R."""
    x = _half_sine(setup, theta)
    num = math.sin(0.5 * setup.s_phi) ** 2
    return _scalar_or_array(theta, num / (2.0 * math.pi * setup.s_p * x * x))


def quantum_curve(setup: QuantumSetup, grid: AngleGrid, kind: str = "quantum") -> DcsCurve:
    func = {"quantum": quantum_dcs, "ab": ab_dcs}[kind]
    params = {"s_p": setup.s_p, "s_phi": setup.s_phi, "forward_eps": setup.forward_eps}
    return DcsCurve(grid, func(setup, grid.thetas), kind, params)


# zero structure -----------------------------------------------------------------

def quantum_zero_angles(s_p: float, k_max: int) -> list[float]:
    """Angles in (0, pi] where 2 s_p sin(theta/2) hits the zeros j_{1,k}, k <= k_max."""
    out = []
    for k in range(1, k_max + 1):
        z = j1_zero(k)
        if z > 2.0 * s_p:
            break
        out.append(2.0 * math.asin(z / (2.0 * s_p)))
    return out


def locate_dcs_zeros(setup: QuantumSetup, theta_hi: float = math.pi,
                     points_per_zero: int = 40) -> list[float]:
    """Zeros of the Born DCS on (forward_eps, theta_hi], found without the zero table.

    The signed amplitude is scanned for sign changes on a grid fine enough to
    separate consecutive zeros and each bracket is refined with Brent's method.
    """
    n_expected = 2.0 * setup.s_p * math.sin(0.5 * theta_hi) / math.pi + 2
    n = max(200, int(points_per_zero * n_expected))
    grid = np.linspace(setup.forward_eps, theta_hi, n)
    amp = born_amplitude(setup, grid)
    zeros = []

    def f(t):
        return born_amplitude(setup, t)

    for i in range(n - 1):
        a, b = amp[i], amp[i + 1]
        if a == 0.0:
            zeros.append(float(grid[i]))
        elif a * b < 0:
            zeros.append(optimize.brentq(f, grid[i], grid[i + 1], xtol=1e-15, rtol=1e-15))
    return zeros


# gauge potential and its Fourier vertex ----------------------------------------

def gauge_profile(r):
    """Azimuthal vector potential in units of Phi / (2 pi R): r inside, 1/r outside."""
    rr = np.asarray(r, dtype=np.float64)
    if np.any(rr < 0):
        raise DomainError("r must be >= 0")
    with np.errstate(divide="ignore"):
        out = np.where(rr < 1.0, rr, 1.0 / np.where(rr < 1.0, 1.0, rr))
    return float(out) if np.ndim(r) == 0 else out


def vertex_profile(q):
    """Radial shape J1(q) / q^2 of the Fourier-transformed potential (hbar = R = 1)."""
    qq = np.asarray(q, dtype=np.float64)
    if np.any(~(qq > 0)):
        raise DomainError("q must be > 0")
    out = j1(qq) / (qq * qq)
    return float(out) if np.ndim(q) == 0 else out


_GL16_X, _GL16_W = np.polynomial.legendre.leggauss(16)


def hankel1_transform(profile: Callable, q: float, r_max: float | None = None,
                      n_points: int | None = None, breakpoints: Sequence[float] = (1.0,)) -> float:
    """Order-1 Hankel transform  int_0^inf profile(r) J1(q r) r dr.

    Gauss-Legendre panels (16 nodes, at most half an oscillation each) up to
    ``r_max``, split at ``breakpoints``; beyond ``r_max`` the profile is taken
    as C / r with C = r_max * profile(r_max), whose tail integral is
    C J0(q r_max) / q exactly.
    """
    if not (math.isfinite(q) and q > 0):
        raise DomainError("q must be > 0")
    if r_max is None:
        r_max = max(60.0, 60.0 / q)
    if r_max < 50.0 / q:
        raise DomainError("r_max must be >= 50 / q")
    period = 2.0 * math.pi / q
    n_osc = r_max / period
    n_min = int(math.ceil(20 * n_osc))
    nodes_per_panel = _GL16_X.size
    if n_points is None:
        n_points = max(n_min, 2 * nodes_per_panel * int(math.ceil(n_osc)) + 4 * nodes_per_panel)
    if n_points < n_min:
        raise NumericalError(
            f"{n_points} points cannot resolve {n_osc:.1f} oscillations (need >= {n_min})"
        )
    cuts = sorted({0.0, r_max, *[c for c in breakpoints if 0.0 < c < r_max]})
    n_panels_total = max(len(cuts) - 1, n_points // nodes_per_panel)
    total = 0.0
    for a, b in zip(cuts[:-1], cuts[1:]):
        m = max(1, int(math.ceil(n_panels_total * (b - a) / r_max)))
        edges = np.linspace(a, b, m + 1)
        mid = 0.5 * (edges[1:] + edges[:-1])[:, None]
        half = 0.5 * np.diff(edges)[:, None]
        r = mid + half * _GL16_X[None, :]
        f = np.asarray(profile(r), dtype=np.float64) * j1(q * r) * r
        total += float(np.sum(half * (f @ _GL16_W[:, None])))
    c_tail = r_max * float(np.asarray(profile(np.array([r_max])), dtype=np.float64)[0])
    total += c_tail * j0(q * r_max) / q
    return total
