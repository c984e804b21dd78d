"""Build the optional Cython evaluation kernels.

If Cython or a compiler is unavailable the package still installs and
falls back to the numpy kernels at import time.
"""
import numpy as np
from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "fermat_pdde.expcore._ckernels",
                ["src/fermat_pdde/expcore/_ckernels.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                # plain complex products; overflowing samples are discarded downstream
                extra_compile_args=["-O3", "-fcx-limited-range"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
