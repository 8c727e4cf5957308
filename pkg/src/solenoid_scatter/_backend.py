"""Pick the kernel implementation at import time.

The compiled extension is used when it imports; setting
``SOLENOID_SCATTER_PURE_PYTHON=1`` forces the pure-Python kernels.
"""
import os

from . import _pykernels

_FORCE_PY = os.environ.get("SOLENOID_SCATTER_PURE_PYTHON", "").strip() not in ("", "0")

if _FORCE_PY:
    kernels = _pykernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:  # pragma: no cover - depends on build
        kernels = _pykernels

BACKEND = kernels.NAME


def available_backends():
    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:  # pragma: no cover
        pass
    else:
        found["cython"] = _ckernels
    return found
