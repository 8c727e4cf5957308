"""Reduction of the physical scattering setup to dimensionless numbers.

Everything downstream is written in terms of three numbers:

* ``s_p = p R / hbar``           -- orbital action in units of hbar
* ``s_phi = e Phi / (hbar c)``   -- flux action in units of hbar
* ``rho_l = r_L / R``            -- Larmor radius in units of the solenoid radius

Lengths and cross sections are reported in units of ``R``. Physical inputs are
taken in Gaussian units.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


def _check_positive(**values: float) -> None:
    for name, value in values.items():
        if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
            raise DomainError(f"{name} must be finite and > 0, got {value!r}")


@dataclass(frozen=True)
class PhysicalInput:
    """Momentum, solenoid radius and flux, plus the constants hbar, e, c."""

    p: float
    R: float
    Phi: float
    hbar: float = 1.0
    e: float = 1.0
    c: float = 1.0

    def __post_init__(self):
        _check_positive(p=self.p, R=self.R, Phi=self.Phi, hbar=self.hbar, e=self.e, c=self.c)

    @property
    def field(self) -> float:
        """Uniform interior field B = Phi / (pi R^2)."""
        return self.Phi / (math.pi * self.R**2)

    @property
    def larmor_radius(self) -> float:
        """r_L = p c / (e B)."""
        return self.p * self.c / (self.e * self.field)


@dataclass(frozen=True)
class DimensionlessConfig:
    s_p: float
    s_phi: float
    rho_l: float

    def __post_init__(self):
        _check_positive(s_p=self.s_p, s_phi=self.s_phi, rho_l=self.rho_l)

    @classmethod
    def from_actions(cls, s_p: float, s_phi: float) -> "DimensionlessConfig":
        return cls(s_p=s_p, s_phi=s_phi, rho_l=rho_from_actions(s_p, s_phi))

    @property
    def beta(self) -> float:
        """Coupling e Phi / (2 pi c) in units of hbar, i.e. s_phi / 2 pi."""
        return self.s_phi / (2.0 * math.pi)


def rho_from_actions(s_p: float, s_phi: float) -> float:
    """Larmor ratio implied by the two actions: rho_l = pi s_p / s_phi."""
    _check_positive(s_p=s_p, s_phi=s_phi)
    return math.pi * s_p / s_phi


def config_from_physical(inp: PhysicalInput) -> DimensionlessConfig:
    s_p = inp.p * inp.R / inp.hbar
    s_phi = inp.e * inp.Phi / (inp.hbar * inp.c)
    return DimensionlessConfig(s_p=s_p, s_phi=s_phi, rho_l=rho_from_actions(s_p, s_phi))
