import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from solenoid_scatter.classical import classical_dcs, deflection_angle, theta_max
from solenoid_scatter.errors import DomainError, NumericalError
from solenoid_scatter.trajectory import (
    CHUNK_SIZE,
    RNG_ALGORITHM,
    arc_deflection,
    bin_average_dcs,
    compare_histogram,
    monte_carlo_dcs,
    pooled_fraction_within,
    rk4_deflection,
)

RHO_GRID = (0.2, 0.5, 1.0, 2.0, 10.0)
B_GRID = (-0.99, -0.5, 0.0, 0.5, 0.99)


def wrapped(a, b):
    return abs((a - b + math.pi) % (2 * math.pi) - math.pi)


def test_arc_examples():
    assert arc_deflection(1.0, 0.0).deflection == pytest.approx(math.pi / 2, abs=1e-12)
    assert arc_deflection(0.5, -0.91144).deflection == pytest.approx(-math.pi / 2, abs=1e-4)
    b = (-1.0 - math.sqrt(7.0)) / 4.0
    assert arc_deflection(0.5, b).deflection == pytest.approx(-math.pi / 2, abs=1e-6)
    assert arc_deflection(3.0, 1.0).deflection == 0.0
    assert abs(arc_deflection(3.0, 1.0 - 1e-12).deflection) < 1e-5


def test_rk4_examples():
    t = rk4_deflection(1.0, 0.0, step=1e-4)
    assert t.deflection == pytest.approx(math.pi / 2, abs=1e-10)
    assert abs(math.hypot(*t.exit_dir) - 1.0) <= 1e-12


def test_rk4_speed_conserved():
    # raw velocity, before normalisation, from the recorded end state
    from solenoid_scatter._backend import kernels

    x, y, vx, vy, *_ = kernels.rk4_exit(0.5, 0.3, 1e-4, 0)
    assert abs(math.hypot(vx, vy) - 1.0) <= 1e-12


def test_rk4_convergence_order():
    exact = arc_deflection(0.5, 0.3)
    arc_err = [abs(rk4_deflection(0.5, 0.3, h).arc_angle - exact.arc_angle) for h in (0.05, 0.025)]
    assert 14.0 <= arc_err[0] / arc_err[1] <= 18.0
    defl_err = [abs(rk4_deflection(0.5, 0.3, h).deflection - exact.deflection) for h in (0.04, 0.02)]
    assert defl_err[0] / defl_err[1] >= 16.0


@pytest.mark.parametrize("rho", RHO_GRID)
@pytest.mark.parametrize("b", B_GRID)
def test_oracles_agree_on_standard_grid(rho, b):
    th = deflection_angle(rho, b)
    arc = arc_deflection(rho, b)
    rk4 = rk4_deflection(rho, b, step=1e-4)
    assert wrapped(arc.deflection, th) <= 1e-9
    assert wrapped(rk4.deflection, arc.deflection) <= 1e-8
    assert wrapped(rk4.deflection, th) <= 1e-6


@given(st.floats(min_value=0.05, max_value=20.0), st.floats(min_value=-0.999, max_value=0.999))
def test_trajectory_invariants(rho, b):
    t = arc_deflection(rho, b)
    assert math.hypot(*t.entry_point) == pytest.approx(1.0, abs=1e-9)
    assert math.hypot(*t.exit_point) == pytest.approx(1.0, abs=1e-9)
    assert math.hypot(*t.exit_dir) == pytest.approx(1.0, abs=1e-12)
    assert wrapped(t.deflection, deflection_angle(rho, b)) <= 1e-9


@given(st.floats(min_value=0.2, max_value=5.0), st.floats(min_value=-0.95, max_value=0.95))
def test_rk4_path_stays_inside(rho, b):
    t = rk4_deflection(rho, b, step=1e-3, record_every=10)
    pts = np.array(t.path)
    assert np.all(np.hypot(pts[:, 0], pts[:, 1]) <= 1.0 + 1e-12)
    assert math.hypot(*t.exit_point) == pytest.approx(1.0, abs=1e-9)


def test_polyline_has_leads():
    t = arc_deflection(0.5, 0.2)
    pts = t.polyline(lead=2.0, n_arc=50)
    assert len(pts) == 53
    assert pts[0] == pytest.approx((t.entry_point[0] - 2.0, t.entry_point[1]))


def test_rk4_errors():
    with pytest.raises(DomainError):
        rk4_deflection(1.0, 0.0, step=0.0)
    with pytest.raises(DomainError):
        rk4_deflection(1.0, 0.0, step=0.5)
    with pytest.raises(DomainError):
        rk4_deflection(1.0, 1.5)
    with pytest.raises(NumericalError) as info:
        rk4_deflection(1.0, 0.999, step=0.1)
    assert info.value.estimate is not None


# Monte Carlo ------------------------------------------------------------------

def test_histogram_normalisation_and_metadata():
    h = monte_carlo_dcs(0.5, 200_000, 64, 7)
    assert h.counts.sum() == 200_000
    assert np.sum(h.dcs_estimate * h.widths) == pytest.approx(2.0, rel=1e-14)
    assert np.all(h.dcs_estimate >= 0)
    assert h.rng_algorithm == RNG_ALGORITHM
    assert h.rng_seed == 7


def test_one_sided_histogram():
    h = monte_carlo_dcs(2.0, 1_000_000, 128, 1)
    assert np.all(h.counts[h.centers < 0] == 0)
    assert np.all(h.counts[h.bin_edges[:-1] >= theta_max(2.0)] == 0)


def test_deterministic_replay_and_worker_independence():
    n = 3 * CHUNK_SIZE // 2
    a = monte_carlo_dcs(0.7, n, 32, 11)
    b = monte_carlo_dcs(0.7, n, 32, 11)
    c = monte_carlo_dcs(0.7, n, 32, 11, workers=3)
    d = monte_carlo_dcs(0.7, n, 32, 12)
    assert np.array_equal(a.counts, b.counts)
    assert np.array_equal(a.counts, c.counts)
    assert not np.array_equal(a.counts, d.counts)


def test_bin_containing_right_angle():
    h = monte_carlo_dcs(0.5, 10_000_000, 128, 42)
    i = int(np.searchsorted(h.bin_edges, math.pi / 2)) - 1
    expected = bin_average_dcs(0.5, h.bin_edges[i], h.bin_edges[i + 1])
    sigma = 2.0 * math.sqrt(h.counts[i]) / (h.n_samples * h.widths[i])
    assert abs(h.dcs_estimate[i] - 0.628) <= 3 * sigma + abs(expected - 0.628)
    assert abs(h.dcs_estimate[i] - expected) <= 3 * sigma
    assert classical_dcs(0.5, math.pi / 2) == pytest.approx(0.628, abs=1e-3)


def test_comparison_report():
    reports = [compare_histogram(monte_carlo_dcs(r, 10_000_000, 128, 42)) for r in (0.5, 2.0)]
    for rep in reports:
        assert rep.all_within_4sigma
        assert 0.0 < rep.chi2_pvalue <= 1.0
        tm = theta_max(rep.rho_l)
        for b in rep.bins:
            assert not (b.theta_lo < 0 < b.theta_hi)
            assert b.theta_hi < tm
    assert pooled_fraction_within(reports) >= 0.95


@pytest.mark.parametrize("kw", [dict(n_samples=100), dict(n_bins=4), dict(rng_seed=-1), dict(rho_l=-1.0)])
def test_monte_carlo_domain(kw):
    args = dict(rho_l=0.5, n_samples=20_000, n_bins=16, rng_seed=0)
    args.update(kw)
    with pytest.raises(DomainError):
        monte_carlo_dcs(**args)
