"""Build script for the compiled kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), but the hot loops -- Bose-Chowla power scans and pair-sum
collision detection -- are orders of magnitude faster compiled.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "urbasis._kernels",
                ["src/urbasis/_kernels.pyx"],
                language="c++",
                extra_compile_args=["-O3", "-std=c++17"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
