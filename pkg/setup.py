"""Build script: compiles the fast kernel extension when a toolchain is present.

The package works without the extension (a pure-Python kernel module is
selected at import time), so any failure here is non-fatal: set
EXPORLICZ_SKIP_EXT=1 to skip the compile step explicitly.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("EXPORLICZ_SKIP_EXT", "") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "exporlicz._kernels._fast",
                    sources=["src/exporlicz/_kernels/_fast.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
