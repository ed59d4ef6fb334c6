"""Build script: compiles the optional kernel extension when Cython is available.

The package is fully functional without the extension (a numpy/Python fallback
is selected at import time), so the extension is marked optional and any build
failure degrades to the pure lane instead of failing the install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# -ffp-contract=off: the pure and compiled lanes must be bit-identical, so no
# FMA contraction of the float expressions in the kernels.
extensions = [
    Extension(
        "indivisibles._kernels._core",
        sources=["src/indivisibles/_kernels/_core.pyx"],
        extra_compile_args=["-O3", "-ffp-contract=off"],
        optional=True,
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"})
    if cythonize is not None
    else []
)
