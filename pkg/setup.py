"""Build hook for the optional compiled kernels.

The package is pure Python plus one Cython extension
(fptkit.kernels._speedups).  When Cython or a C compiler is missing the
extension is skipped and the pure backend is selected at import time, so
`pip install` never hard-fails on toolchain gaps.
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
                "fptkit.kernels._speedups",
                ["src/fptkit/kernels/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
