import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from solenoid_scatter.errors import DomainError
from solenoid_scatter.units import (
    DimensionlessConfig,
    PhysicalInput,
    config_from_physical,
    rho_from_actions,
)

positive = st.floats(min_value=1e-6, max_value=1e6, allow_nan=False, allow_infinity=False)


def test_unit_flux_quantum_setup():
    cfg = config_from_physical(PhysicalInput(p=1.0, R=1.0, Phi=2 * math.pi))
    assert cfg.s_p == 1.0
    assert cfg.s_phi == pytest.approx(2 * math.pi, rel=1e-15)
    assert cfg.rho_l == pytest.approx(0.5, rel=1e-15)


@pytest.mark.parametrize("s_p, s_phi, expected", [(1.0, math.pi, 1.0), (2.0, math.pi, 2.0)])
def test_rho_from_actions_values(s_p, s_phi, expected):
    assert rho_from_actions(s_p, s_phi) == pytest.approx(expected, rel=1e-15)


@given(positive)
def test_equal_actions_give_pi(x):
    assert rho_from_actions(x, x) == pytest.approx(math.pi, rel=1e-15)


@given(positive, positive, st.floats(min_value=1e-3, max_value=1e3))
def test_rho_invariant_under_common_scaling(s_p, s_phi, lam):
    assert rho_from_actions(lam * s_p, lam * s_phi) == pytest.approx(rho_from_actions(s_p, s_phi), rel=1e-13)


@given(positive, positive, positive, st.floats(min_value=0.1, max_value=10.0))
def test_hbar_scaling_scales_both_actions(p, R, Phi, lam):
    a = config_from_physical(PhysicalInput(p, R, Phi))
    b = config_from_physical(PhysicalInput(p, R, Phi, hbar=1.0 / lam))
    assert b.s_p == pytest.approx(lam * a.s_p, rel=1e-13)
    assert b.s_phi == pytest.approx(lam * a.s_phi, rel=1e-13)
    assert b.rho_l == pytest.approx(a.rho_l, rel=1e-13)


@given(positive, positive, positive, positive, positive, positive)
def test_larmor_reconstruction(p, R, Phi, hbar, e, c):
    inp = PhysicalInput(p, R, Phi, hbar, e, c)
    cfg = config_from_physical(inp)
    r_l = p * c * math.pi * R**2 / (e * Phi)
    assert cfg.rho_l * R == pytest.approx(r_l, rel=1e-12)
    assert inp.larmor_radius == pytest.approx(r_l, rel=1e-12)


def test_config_invariant_holds():
    cfg = DimensionlessConfig.from_actions(3.0, 7.0)
    assert cfg.rho_l == math.pi * 3.0 / 7.0
    assert cfg.beta == pytest.approx(7.0 / (2 * math.pi))


@pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
def test_rejects_non_positive(bad):
    with pytest.raises(DomainError):
        PhysicalInput(p=bad, R=1.0, Phi=1.0)
    with pytest.raises(DomainError):
        rho_from_actions(1.0, bad)
    with pytest.raises(DomainError):
        DimensionlessConfig(1.0, 1.0, bad)
