"""Build the optional compiled kernels.

The extension is optional: if Cython or a C compiler is missing the package
installs without it and the pure-Python kernels are used at import time.
"""
import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - depends on toolchain
            print(f"warning: compiled kernels not built ({exc}); using pure Python", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            print(f"warning: failed to build {ext.name} ({exc})", file=sys.stderr)


def extensions():
    if os.environ.get("SOLENOID_SCATTER_NO_EXT"):
        return []
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    ext = Extension(
        "solenoid_scatter._ckernels",
        ["src/solenoid_scatter/_ckernels.pyx"],
        include_dirs=[np.get_include()],
        # fp contraction would break the error-free transforms in the
        # double-double arithmetic
        extra_compile_args=["-O3", "-ffp-contract=off"],
        libraries=["m"] if os.name != "nt" else [],
    )
    return cythonize(
        [ext],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
