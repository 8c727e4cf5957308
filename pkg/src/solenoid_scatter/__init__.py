"""Classical and first-order quantum scattering of charges by a finite solenoid.

Everything is dimensionless: lengths and cross sections in units of the
solenoid radius R, actions s_p = pR/hbar and s_phi = e Phi/(hbar c), and the
reduced Larmor radius rho_l = pi s_p / s_phi.
"""
__version__ = "0.1.0"

from ._backend import BACKEND
from .bessel import j0, j1, j1_envelope, j1_zero, j2
from .classical import (
    AngleGrid,
    BranchSet,
    DcsCurve,
    classical_curve,
    classical_dcs,
    classical_dcs_printed,
    deflection_angle,
    impact_parameters_for,
    limit_dcs_high_energy,
    limit_dcs_impenetrable,
    make_angle_grid,
    theta_max,
    total_cross_section,
)
from .climit import (
    ScalingFit,
    ScalingScan,
    analytic_envelope,
    envelope_at,
    fit_loglog,
    fit_loglog_slope,
    scaling_scan,
)
from .errors import CausticDivergence, DomainError, ForwardSingularity, NumericalError, SingularityError
from .quantum import QuantumSetup, ab_dcs, gauge_profile, hankel1_transform, quantum_dcs, vertex_profile
from .trajectory import (
    DcsHistogram,
    Trajectory,
    arc_deflection,
    compare_histogram,
    monte_carlo_dcs,
    rk4_deflection,
)
from .units import DimensionlessConfig, PhysicalInput, config_from_physical, rho_from_actions

__all__ = [
    "BACKEND",
    "AngleGrid", "BranchSet", "DcsCurve", "DcsHistogram", "DimensionlessConfig", "PhysicalInput",
    "QuantumSetup", "ScalingFit", "ScalingScan", "Trajectory",
    "CausticDivergence", "DomainError", "ForwardSingularity", "NumericalError", "SingularityError",
    "ab_dcs", "analytic_envelope", "arc_deflection", "classical_curve", "classical_dcs",
    "classical_dcs_printed", "compare_histogram", "config_from_physical", "deflection_angle",
    "envelope_at", "fit_loglog", "fit_loglog_slope", "gauge_profile", "hankel1_transform",
    "impact_parameters_for", "j0", "j1", "j1_envelope", "j1_zero", "j2", "limit_dcs_high_energy",
    "limit_dcs_impenetrable", "make_angle_grid", "monte_carlo_dcs", "quantum_dcs", "rho_from_actions",
    "rk4_deflection", "scaling_scan", "theta_max", "total_cross_section", "vertex_profile",
]
