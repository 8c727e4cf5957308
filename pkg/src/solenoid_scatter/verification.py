"""Invariant suite behind ``solenoid-scatter verify``.

Each check is a deterministic re-run of a module invariant that reports the
observed quantity next to its threshold.
"""
from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass

import numpy as np

from . import bessel, bessel_reference, classical, climit, quantum, trajectory
from ._backend import BACKEND

RHO_GRID = (0.2, 0.5, 1.0, 2.0, 10.0)
B_GRID = (-0.99, -0.5, 0.0, 0.5, 0.99)


@dataclass
class CheckResult:
    name: str
    passed: bool
    value: float
    threshold: float
    seconds: float = 0.0
    detail: str = ""

    def __post_init__(self):
        self.passed = bool(self.passed)
        self.value = float(self.value)
        self.threshold = float(self.threshold)


def _wrap_diff(a, b):
    d = (a - b + math.pi) % (2.0 * math.pi) - math.pi
    return abs(d)


def check_deflection_oracles() -> list[CheckResult]:
    arc = rk4 = 0.0
    for rho in RHO_GRID:
        for b in B_GRID:
            th = classical.deflection_angle(rho, b)
            arc = max(arc, _wrap_diff(th, trajectory.arc_deflection(rho, b).deflection))
            rk4 = max(rk4, _wrap_diff(th, trajectory.rk4_deflection(rho, b, step=1e-4).deflection))
    return [
        CheckResult("deflection_vs_arc", arc <= 1e-9, arc, 1e-9),
        CheckResult("deflection_vs_rk4", rk4 <= 1e-6, rk4, 1e-6),
    ]


def check_flux() -> list[CheckResult]:
    worst = max(abs(classical.total_cross_section(r) - 2.0) for r in (0.1, 0.5, 0.9, 1.1, 2.0, 10.0))
    return [CheckResult("total_cross_section", worst <= 1e-3, worst, 1e-3)]


def check_limits() -> list[CheckResult]:
    ths = np.linspace(-math.pi, math.pi, 258)[1:-1]
    imp = max(abs(classical.classical_dcs(1e-4, t) - classical.limit_dcs_impenetrable(t)) for t in ths)
    tm = classical.theta_max(100.0)
    he = max(abs(classical.limit_dcs_high_energy(100.0, t) / classical.classical_dcs(100.0, t) - 1.0)
             for t in np.linspace(0.01 * tm, 0.8 * tm, 64))
    return [
        CheckResult("impenetrable_limit", imp <= 1e-3, imp, 1e-3),
        CheckResult("high_energy_limit", he <= 0.02, he, 0.02),
    ]


def check_monte_carlo(n_samples: int = 10_000_000, n_bins: int = 128, seed: int = 42) -> list[CheckResult]:
    reports = [trajectory.compare_histogram(trajectory.monte_carlo_dcs(r, n_samples, n_bins, seed))
               for r in (0.5, 2.0)]
    frac = trajectory.pooled_fraction_within(reports, 2.0)
    worst = max(r.max_abs_sigma for r in reports)
    return [
        CheckResult("mc_within_2sigma", frac >= 0.95, frac, 0.95, detail=f"N={n_samples} seed={seed}"),
        CheckResult("mc_within_4sigma", worst <= 4.0, worst, 4.0),
    ]


def check_quantum() -> list[CheckResult]:
    small = quantum.QuantumSetup(1e-3, 1e-3)
    ths = np.linspace(0.1, math.pi, 400)
    ab = float(np.max(np.abs(quantum.quantum_dcs(small, ths) / quantum.ab_dcs(small, ths) - 1.0)))
    setup = quantum.QuantumSetup(50.0, 50.0)
    found = quantum.locate_dcs_zeros(setup)
    predicted = quantum.quantum_zero_angles(50.0, 10)
    zerr = max(min(abs(f - p) for f in found) for p in predicted)
    qs = np.linspace(0.5, 20.0, 40)
    ratios = [quantum.hankel1_transform(quantum.gauge_profile, q) / quantum.vertex_profile(q) for q in qs]
    spread = max(abs(r - 2.0) for r in ratios)
    return [
        CheckResult("ab_reduction", ab <= 1e-5, ab, 1e-5),
        CheckResult("zero_structure", zerr <= 1e-8, zerr, 1e-8),
        CheckResult("vertex_ratio", spread <= 1e-6, spread, 1e-6),
    ]


def check_scaling() -> list[CheckResult]:
    out = []
    for rho, th in ((0.5, math.pi / 2), (2.0, math.pi / 4)):
        scan = climit.scaling_scan(rho, th, 100.0)
        fit = climit.fit_loglog_slope(scan)
        ok = abs(fit.slope + 2.0) <= 0.05 and fit.max_residual <= 0.02
        out.append(CheckResult(f"envelope_slope_rho{rho:g}", ok, fit.slope, -2.0,
                               detail=f"max_residual={fit.max_residual!r}"))
        cslope = climit.fit_loglog(scan.lambdas, climit.classical_counterpart(scan)).slope
        out.append(CheckResult(f"classical_slope_rho{rho:g}", abs(cslope) <= 1e-12, cslope, 0.0))
    return out


def check_bessel(n: int = 60) -> list[CheckResult]:
    xs = np.linspace(0.05, 100.0, n)
    worst = 0.0
    for x in xs:
        for nu, f in ((0, bessel.j0), (1, bessel.j1)):
            ref = bessel_reference.j_reference(nu, float(x))
            err = abs(f(float(x)) - ref)
            worst = max(worst, err / abs(ref) if abs(ref) > 1e-3 else err)
    return [CheckResult("bessel_vs_oracle", worst <= 1e-11, worst, 1e-11)]


SUITES = {
    "classical": (check_deflection_oracles, check_flux, check_limits),
    "trajectory": (check_monte_carlo,),
    "quantum": (check_quantum,),
    "climit": (check_scaling,),
    "bessel": (check_bessel,),
}


def run_all(suites=None) -> dict:
    """Run the selected suites and return a JSON-ready report."""
    names = list(SUITES) if suites is None else list(suites)
    results = []
    for name in names:
        for check in SUITES[name]:
            t0 = time.perf_counter()
            for res in check():
                res.seconds = time.perf_counter() - t0
                results.append({"suite": name, **asdict(res)})
    return {
        "backend": BACKEND,
        "passed": all(r["passed"] for r in results),
        "checks": results,
    }
