"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a numpy fallback is selected at
import time), so any compilation failure downgrades to a pure build
instead of aborting the install.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or toolchain missing
            print(f"spxreg: skipping C extension ({exc}); using pure-python kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"spxreg: failed to build {ext.name} ({exc}); using pure-python kernels")


def extensions():
    if os.environ.get("SPXREG_NO_EXT"):
        return []
    if not os.path.exists("src/spxreg/_kernels/_ckernels.pyx"):
        return []
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "spxreg._kernels._ckernels",
        sources=["src/spxreg/_kernels/_ckernels.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_9_API_VERSION")],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
