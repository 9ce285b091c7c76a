"""Build script: compiles the Cython kernel extension when possible.

The package works without the extension (a pure-Python/numpy fallback is
selected at import time), so any failure to compile only costs speed.
Set DICKE_TRIANGLE_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("DICKE_TRIANGLE_NO_EXT"):
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "dicke_triangle._kernels",
                    ["src/dicke_triangle/_kernels.pyx"],
                    include_dirs=[numpy.get_include()],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError as exc:  # no cython/numpy at build time: fallback only
        print(f"dicke-triangle: skipping compiled kernels ({exc})")

setup(ext_modules=ext_modules)
