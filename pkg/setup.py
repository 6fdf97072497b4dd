"""Build script: compiles the fast numeric kernels when Cython and a C
compiler are available. The package works without them (pure-numpy
fallback is selected at import time), so failures here are non-fatal."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "dialectlab.nn._ckernels",
                ["src/dialectlab/nn/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
