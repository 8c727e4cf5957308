"""Compiled and pure-Python kernels must agree."""
import os
import subprocess
import sys

import numpy as np
import pytest

from solenoid_scatter import _pykernels
from solenoid_scatter._backend import BACKEND, available_backends

backends = available_backends()
needs_ext = pytest.mark.skipif("cython" not in backends, reason="compiled extension not built")


def test_selected_backend_is_known():
    assert BACKEND in backends


def test_pure_python_can_be_forced():
    env = dict(os.environ, SOLENOID_SCATTER_PURE_PYTHON="1")
    proc = subprocess.run([sys.executable, "-c", "import solenoid_scatter; print(solenoid_scatter.BACKEND)"],
                          capture_output=True, text=True, env=env)
    assert proc.stdout.strip() == "python"


@needs_ext
def test_bessel_kernels_agree():
    c = backends["cython"]
    x = np.concatenate([np.linspace(0.0, 130.0, 20001), np.logspace(2, 5, 500)])
    for name in ("j0_array", "j1_array"):
        a, b = getattr(_pykernels, name)(x), getattr(c, name)(x)
        scale = np.maximum(np.abs(a), 1e-3)
        assert np.max(np.abs(a - b) / scale) <= 1e-14


@needs_ext
@pytest.mark.parametrize("rho, b", [(0.5, 0.3), (2.0, -0.4), (10.0, 0.9)])
def test_rk4_kernels_bit_identical(rho, b):
    c = backends["cython"]
    ra = _pykernels.rk4_exit(rho, b, 1e-3, 50)
    rb = c.rk4_exit(rho, b, 1e-3, 50)
    assert ra[:6] == rb[:6]
    assert list(ra[6]) == list(rb[6])


@needs_ext
def test_monte_carlo_kernels_agree():
    c = backends["cython"]
    rng = np.random.default_rng(0)
    b = rng.uniform(-1.0, 1.0, 200_000)
    for rho in (0.5, 2.0):
        assert np.array_equal(_pykernels.mc_counts(rho, b, 128), c.mc_counts(rho, b, 128))
        da = _pykernels.arc_deflections(rho, b[:1000])
        db = c.arc_deflections(rho, b[:1000])
        assert np.max(np.abs(np.asarray(da) - np.asarray(db))) <= 4.5e-16


def test_pure_python_constants_match():
    for name in ("SERIES_CUTOFF", "TAYLOR_RADIUS", "TAYLOR_TERMS"):
        for mod in backends.values():
            assert getattr(mod, name) == getattr(_pykernels, name)
