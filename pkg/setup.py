"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python implementation is
selected at import time), so a failed extension build only costs speed.
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "arithcoh._kernels",
                ["src/arithcoh/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    import sys

    print(f"warning: compiled kernels disabled ({exc})", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules)
