"""Classical scattering by the uniform field inside a solenoid of radius R.

All lengths are in units of R. Outside the solenoid the electron moves on a
straight line; inside it follows a Larmor circle of radius ``rho_l``. The
deflection as a function of impact parameter ``b`` is

    theta(b) = 2 atan2(sqrt(1 - b^2), b + rho_l),

taken in [0, 2 pi) and wrapped to (-pi, pi]. The cross section at an angle is
the sum of |db/dtheta| over every impact parameter that reaches it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np
from scipy import integrate

from .errors import CausticDivergence, DomainError, ForwardSingularity, NumericalError

TWO_PI = 2.0 * math.pi

#: exclusion half-width around the fold caustic at +-theta_max (radians)
CAUSTIC_EPS = 1e-6


def _check_rho(rho_l: float) -> None:
    if not (math.isfinite(rho_l) and rho_l > 0):
        raise DomainError(f"rho_l must be finite and > 0, got {rho_l!r}")


def _check_sign(field_sign: int) -> None:
    if field_sign not in (1, -1):
        raise DomainError("field_sign must be +1 or -1")


def raw_deflection(rho_l: float, b: float) -> float:
    """Counter-clockwise rotation of the velocity, in [0, 2 pi]."""
    return 2.0 * math.atan2(math.sqrt(max(0.0, 1.0 - b * b)), b + rho_l)


def deflection_angle(rho_l: float, b: float, field_sign: int = 1) -> float:
    """Scattering angle in (-pi, pi] for impact parameter ``b`` (|b| <= 1).

    ``field_sign=-1`` reverses the field (or the charge), mirroring theta.
    """
    _check_rho(rho_l)
    _check_sign(field_sign)
    if not abs(b) <= 1.0:
        raise DomainError(f"|b| must be <= 1 (particle misses the solenoid), got {b!r}")
    if abs(b) == 1.0:
        return 0.0
    theta = raw_deflection(rho_l, b)
    if theta > math.pi:
        theta -= TWO_PI
    if field_sign < 0 and theta != math.pi:
        theta = -theta
    return theta


def deflection_derivative(rho_l: float, b: float) -> float:
    """Analytic d(theta)/db = -2 (1 + b rho) / (sqrt(1 - b^2) (1 + 2 b rho + rho^2))."""
    s = math.sqrt(1.0 - b * b)
    return -2.0 * (1.0 + b * rho_l) / (s * (1.0 + 2.0 * b * rho_l + rho_l * rho_l))


def fold_impact_parameter(rho_l: float) -> float | None:
    """Impact parameter of the fold (d theta/db = 0), or None if rho_l < 1."""
    _check_rho(rho_l)
    return -1.0 / rho_l if rho_l >= 1.0 else None


def theta_max(rho_l: float) -> float:
    """Largest attainable deflection.

    For rho_l >= 1 the fold of theta(b) at b = -1/rho_l gives
    sin(theta_max / 2) = 1 / rho_l; below rho_l = 1 every angle is reached.
    """
    _check_rho(rho_l)
    if rho_l <= 1.0:
        return math.pi
    return 2.0 * math.asin(1.0 / rho_l)


def theta_max_printed(rho_l: float) -> float:
    """The relation sin(theta_max) = 1 / rho_l, kept for comparison only.

    It disagrees with the deflection function by a factor two in the angle;
    see :func:`theta_max` for the attainable maximum.
    """
    _check_rho(rho_l)
    if rho_l < 1.0:
        return math.pi
    return math.asin(1.0 / rho_l)


class Branch(NamedTuple):
    b: float
    jacobian: float


@dataclass(frozen=True)
class BranchSet:
    theta: float
    branches: tuple[Branch, ...] = ()

    def __len__(self):
        return len(self.branches)

    def __iter__(self):
        return iter(self.branches)

    @property
    def dcs(self) -> float:
        return sum(br.jacobian for br in self.branches)


def _bisect(rho_l, target, lo, hi, increasing, xtol):
    # endpoints are never evaluated; raw_deflection is ill-defined at b = -1, rho = 1
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        below = raw_deflection(rho_l, mid) < target
        if below == increasing:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _branch(rho_l, b):
    d = deflection_derivative(rho_l, b)
    return Branch(b, math.inf if d == 0.0 else 1.0 / abs(d))


def impact_parameters_for(rho_l: float, theta: float, field_sign: int = 1,
                          xtol: float = 1e-14) -> BranchSet:
    """Every impact parameter deflected to ``theta``, with |db/dtheta|."""
    _check_rho(rho_l)
    _check_sign(field_sign)
    if not -math.pi < theta <= math.pi:
        raise DomainError("theta must lie in (-pi, pi]")
    if theta == 0.0:
        raise DomainError("theta = 0 is excluded (forward direction)")
    t = -theta if (field_sign < 0 and theta != math.pi) else theta
    if rho_l < 1.0:
        target = t if t > 0 else t + TWO_PI
        b = _bisect(rho_l, target, -1.0, 1.0, increasing=False, xtol=xtol)
        return BranchSet(theta, (_branch(rho_l, b),))
    if t < 0:
        return BranchSet(theta)
    if rho_l == 1.0:
        if t >= math.pi:
            return BranchSet(theta)
        b = _bisect(rho_l, t, -1.0, 1.0, increasing=False, xtol=xtol)
        return BranchSet(theta, (_branch(rho_l, b),))
    tmax = theta_max(rho_l)
    bstar = -1.0 / rho_l
    if t > tmax:
        return BranchSet(theta)
    if t == tmax:
        return BranchSet(theta, (Branch(bstar, math.inf),))
    b_low = _bisect(rho_l, t, -1.0, bstar, increasing=True, xtol=xtol)
    b_high = _bisect(rho_l, t, bstar, 1.0, increasing=False, xtol=xtol)
    return BranchSet(theta, (_branch(rho_l, b_low), _branch(rho_l, b_high)))


def printed_terms(rho_l: float, theta: float) -> tuple[float, float]:
    """The two per-branch magnitudes of the closed-form DCS (units of R).

    Uses sin(theta) / (2 cos(theta/2)) = sin(theta/2) so theta = pi is regular.
    Returns NaNs where rho_l sin(theta/2) > 1 (angle not attainable).
    """
    half = math.sin(0.5 * theta)
    arg = 1.0 - rho_l * rho_l * half * half
    if arg < 0.0:
        return math.nan, math.nan
    a = 0.5 * math.sin(theta) * rho_l
    c = half * (1.0 + rho_l * rho_l * math.cos(theta)) / (2.0 * math.sqrt(arg))
    return abs(a + c), abs(a - c)


def classical_dcs_printed(rho_l: float, theta: float) -> float:
    """Closed-form DCS exactly as printed: term1 + Heaviside(|rho| - 1) * term2.

    This expression is even in theta; for rho_l < 1 it reports the theta > 0
    branch at both +-theta. :func:`classical_dcs` is the flux-conserving version.
    """
    _check_rho(rho_l)
    t1, t2 = printed_terms(rho_l, theta)
    return t1 + (t2 if abs(rho_l) > 1.0 else 0.0)


def _check_angle(rho_l, theta, caustic_eps, field_sign):
    if theta == 0.0:
        raise ForwardSingularity("theta = 0 is excluded (forward direction)")
    if rho_l > 1.0:
        tmax = theta_max(rho_l)
        t = -theta if field_sign < 0 else theta
        if abs(t - tmax) < caustic_eps:
            raise CausticDivergence(
                f"theta={theta!r} within {caustic_eps:g} of the fold caustic at {tmax!r}",
                theta_caustic=field_sign * tmax,
            )


def classical_dcs(rho_l: float, theta: float, caustic_eps: float = CAUSTIC_EPS,
                  field_sign: int = 1) -> float:
    """Classical DCS in units of R: sum of |db/dtheta| over all branches."""
    _check_rho(rho_l)
    _check_sign(field_sign)
    _check_angle(rho_l, theta, caustic_eps, field_sign)
    return impact_parameters_for(rho_l, theta, field_sign=field_sign).dcs


def limit_dcs_impenetrable(theta: float) -> float:
    """rho_l -> 0 limit: (1/2) |sin(theta/2)|."""
    if not -math.pi < theta <= math.pi:
        raise DomainError("theta must lie in (-pi, pi]")
    return 0.5 * abs(math.sin(0.5 * theta))


def limit_dcs_high_energy(rho_l: float, theta: float) -> float:
    """rho_l >> 1 limit inside the forward cone: theta (1 + rho^2) / sqrt(4 - rho^2 theta^2)."""
    _check_rho(rho_l)
    if rho_l < 10.0:
        raise DomainError("high-energy limit requires rho_l >= 10")
    if theta < 0:
        raise DomainError("high-energy limit is defined for 0 <= theta")
    if rho_l * theta >= 2.0:
        raise DomainError("rho_l * theta must be < 2")
    return theta * (1.0 + rho_l * rho_l) / math.sqrt(4.0 - (rho_l * theta) ** 2)


def total_cross_section(rho_l: float, tol: float = 1e-9) -> float:
    """Integral of the classical DCS over all attainable angles (units of R).

    Flux conservation makes this 2 for any rho_l. For rho_l >= 1 the fold at
    theta_max is removed with theta = theta_max - u^2.
    """
    _check_rho(rho_l)

    def dcs(theta):
        return impact_parameters_for(rho_l, theta).dcs

    opts = dict(epsabs=tol, epsrel=tol, limit=200, full_output=1)
    if rho_l < 1.0:
        pieces = [integrate.quad(dcs, -math.pi, 0.0, **opts),
                  integrate.quad(dcs, 0.0, math.pi, **opts)]
    else:
        tmax = theta_max(rho_l)

        def g(u):
            if u == 0.0:
                return 0.0 if rho_l == 1.0 else _fold_limit(rho_l)
            return 2.0 * u * dcs(tmax - u * u)

        pieces = [integrate.quad(g, 0.0, math.sqrt(tmax), **opts)]
    value = sum(p[0] for p in pieces)
    err = sum(p[1] for p in pieces)
    if any(len(p) > 3 for p in pieces) or err > 1e3 * tol + 1e-6:
        raise NumericalError(f"quadrature did not converge (error estimate {err:g})", estimate=value)
    return value


def _fold_limit(rho_l):
    # 2u * dcs(theta_max - u^2) as u -> 0, from a short extrapolation
    tmax = theta_max(rho_l)
    u = 1e-4
    return 2.0 * u * impact_parameters_for(rho_l, tmax - u * u).dcs


# curves ----------------------------------------------------------------------

@dataclass(frozen=True)
class AngleGrid:
    thetas: np.ndarray
    exclusion_eps: float = 0.0
    singularities: tuple[float, ...] = ()

    def __post_init__(self):
        th = np.asarray(self.thetas, dtype=np.float64)
        object.__setattr__(self, "thetas", th)
        if th.ndim != 1:
            raise DomainError("angle grid must be one-dimensional")
        if th.size and (th[0] <= -math.pi or th[-1] > math.pi):
            raise DomainError("angles must lie in (-pi, pi]")
        if np.any(np.diff(th) <= 0):
            raise DomainError("angle grid must be strictly increasing")
        for s in self.singularities:
            if np.any(np.abs(th - s) < self.exclusion_eps):
                raise DomainError(f"grid point within {self.exclusion_eps:g} of singular angle {s!r}")

    def __len__(self):
        return self.thetas.size


def make_angle_grid(theta_min: float, theta_max_: float, n: int,
                    singularities: Sequence[float] = (0.0,), exclusion_eps: float = 1e-6) -> AngleGrid:
    """Uniform grid on [theta_min, theta_max_] with singular neighbourhoods removed."""
    if n < 1:
        raise DomainError("grid needs at least one point")
    if not (-math.pi < theta_min <= theta_max_ <= math.pi):
        raise DomainError("need -pi < theta_min <= theta_max <= pi")
    th = np.linspace(theta_min, theta_max_, n) if n > 1 else np.array([theta_min])
    keep = np.ones(th.size, dtype=bool)
    for s in singularities:
        keep &= np.abs(th - s) >= exclusion_eps
    return AngleGrid(th[keep], exclusion_eps=exclusion_eps, singularities=tuple(singularities))


@dataclass(frozen=True)
class DcsCurve:
    grid: AngleGrid
    values: np.ndarray
    kind: str
    params: dict = field(default_factory=dict)

    KINDS = ("classical", "quantum", "ab", "limit4", "limit5")

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.float64)
        object.__setattr__(self, "values", vals)
        if self.kind not in self.KINDS:
            raise DomainError(f"unknown curve kind {self.kind!r}")
        if vals.shape != self.grid.thetas.shape:
            raise DomainError("values and grid differ in length")
        if not np.all(np.isfinite(vals)) or np.any(vals < 0):
            raise DomainError("DCS values must be finite and non-negative")


def classical_singularities(rho_l: float, field_sign: int = 1) -> tuple[float, ...]:
    if rho_l > 1.0:
        return (0.0, field_sign * theta_max(rho_l))
    return (0.0,)


def classical_curve(rho_l: float, grid: AngleGrid, field_sign: int = 1) -> DcsCurve:
    vals = np.array([classical_dcs(rho_l, float(t), caustic_eps=grid.exclusion_eps or CAUSTIC_EPS,
                                   field_sign=field_sign)
                     for t in grid.thetas])
    return DcsCurve(grid, vals, "classical", {"rho_l": rho_l, "field_sign": field_sign})
