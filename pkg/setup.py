"""Build script for the optional compiled kernels.

The package works without the extension; ``pclab.kernels`` falls back to
the pure-Python implementations when ``pclab._kernels`` cannot be imported.
Set ``PCLAB_NO_EXT=1`` to skip compilation entirely.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("PCLAB_NO_EXT"):
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "pclab._kernels",
                    ["src/pclab/_kernels.pyx"],
                    include_dirs=[np.get_include()],
                    libraries=["gmp"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # pragma: no cover - build environment dependent
        print(f"pclab: building without compiled kernels ({exc})")
        ext_modules = []

setup(ext_modules=ext_modules)
