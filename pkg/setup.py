import os

from setuptools import Extension, setup

# The compiled kernel is optional: LCMJUMPS_PURE=1 skips it, and a missing
# Cython falls back to the pure-Python implementation selected at import.
ext_modules = []
if not os.environ.get("LCMJUMPS_PURE"):
    try:
        import numpy as np
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "lcmjumps._kernels",
                    ["src/lcmjumps/_kernels.pyx"],
                    include_dirs=[np.get_include()],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
