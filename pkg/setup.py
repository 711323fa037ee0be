"""Build script for the compiled kernel extension.

The package works without the extension (a pure NumPy fallback is selected
at import time), so a failed compile only costs speed. -ffp-contract=off
keeps the C arithmetic bit-identical to the fallback: no FMA contraction.
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "mirror_shaper._kernels._fast",
                ["src/mirror_shaper/_kernels/_fast.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
