import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from solenoid_scatter import bessel
from solenoid_scatter._backend import kernels
from solenoid_scatter.bessel import BesselAccuracy, j0, j1, j1_envelope, j1_zero, j2
from solenoid_scatter.bessel_reference import j_reference, zero_decimal
from solenoid_scatter.errors import DomainError


def test_values_at_origin():
    assert j1(0.0) == 0.0
    assert j0(0.0) == 1.0


@pytest.mark.parametrize(
    "nu, x, expected",
    [
        (1, 1.0, 0.4400505857449335),
        (1, 10.0, 0.04347274616886144),
        (0, 1.0, 0.7651976865579666),
    ],
)
def test_oracle_values(nu, x, expected):
    f = j1 if nu else j0
    assert j_reference(nu, x) == pytest.approx(expected, rel=1e-15)
    assert f(x) == pytest.approx(expected, rel=1e-14)


def test_first_j0_zero():
    z = float(zero_decimal(0, 2.4))
    assert z == pytest.approx(2.4048255577, abs=1e-9)
    assert abs(j0(2.4048255577)) <= 1e-9


def test_j1_zeros():
    assert j1_zero(1) == pytest.approx(3.8317059702, abs=1e-9)
    assert j1_zero(2) == pytest.approx(7.0155866698, abs=1e-9)
    assert j1_zero(1) == pytest.approx(float(zero_decimal(1, 3.8)), abs=1e-13)
    assert j1_zero(101) - j1_zero(100) == pytest.approx(math.pi, abs=1e-3)


def test_zero_residuals_up_to_100():
    for k in range(1, 101):
        assert abs(j1(j1_zero(k))) <= 1e-10


def test_envelope_values():
    assert j1_envelope(2 / math.pi) == pytest.approx(1.0, rel=1e-15)
    assert j1_envelope(200.0) == pytest.approx(0.05641895835477563, rel=1e-12)


def test_envelope_tracks_local_maxima():
    x = np.linspace(50.0, 100.0, 50001)
    a = np.abs(j1(x))
    idx = np.nonzero((a[1:-1] > a[:-2]) & (a[1:-1] >= a[2:]))[0] + 1
    assert idx.size >= 15
    rel = np.abs(a[idx] / j1_envelope(x[idx]) - 1.0)
    assert rel.max() <= 0.01


def test_recurrence_residual_against_oracle():
    for x in np.linspace(0.1, 100.0, 211):
        j2_ref = 2.0 * j_reference(1, x) / x - j_reference(0, x)
        assert abs(j0(x) + j2(x) - 2.0 * j1(x) / x) <= 1e-10
        assert abs(j2(x) - j2_ref) <= 1e-10


def test_derivative_identity_finite_difference():
    h = 1e-5
    for x in np.linspace(0.5, 50.0, 200):
        fd = (j1(x + h) - j1(x - h)) / (2 * h)
        assert fd == pytest.approx(j0(x) - j1(x) / x, abs=1e-8)


def test_series_and_asymptotic_agree_in_overlap():
    cut = kernels.SERIES_CUTOFF
    for x in np.linspace(cut - 1.0, cut + 1.0, 81):
        for nu in (0, 1):
            s = kernels.j_series(nu, float(x))
            a = kernels.j_asymptotic(nu, float(x))
            if abs(s) > 1e-2:
                assert abs(s - a) <= 1e-11 * abs(s)
            else:
                assert abs(s - a) <= 1e-13


@given(st.floats(min_value=0.0, max_value=120.0))
def test_matches_oracle_property(x):
    for nu, f in ((0, j0), (1, j1)):
        ref = j_reference(nu, x)
        assert abs(f(x) - ref) <= 1e-11 * max(abs(ref), 1e-2)


@given(st.lists(st.floats(min_value=0.0, max_value=500.0), min_size=1, max_size=20))
def test_array_matches_scalar(xs):
    arr = np.array(xs)
    out = j1(arr)
    assert out.shape == arr.shape
    for x, v in zip(xs, out):
        assert v == j1(x)


def test_large_arguments_decay():
    x = np.array([1e3, 1e4, 1e5])
    assert np.all(np.abs(j1(x)) <= j1_envelope(x) * 1.01)


@pytest.mark.parametrize("bad", [-1.0, math.nan, math.inf])
def test_domain_errors(bad):
    with pytest.raises(DomainError):
        j0(bad)
    with pytest.raises(DomainError):
        j1(np.array([1.0, bad]))


@pytest.mark.parametrize("k", [0, 10_001, 1.5, True])
def test_zero_index_domain(k):
    with pytest.raises(DomainError):
        j1_zero(k)


def test_accuracy_config_validation():
    assert 5.0 <= bessel.ACCURACY.series_cutoff <= 30.0
    with pytest.raises(DomainError):
        BesselAccuracy(series_cutoff=40.0, target_rel_err=1e-13)
    with pytest.raises(DomainError):
        BesselAccuracy(series_cutoff=20.0, target_rel_err=1e-9)
