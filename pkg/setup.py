"""Build script: compiles the optional arithmetic kernel.

The extension is a speedup only; if Cython or a C compiler is missing the
install still succeeds and the package falls back to the pure-Python kernel
(see qformff._kernel).
"""

import os
import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """build_ext that degrades to a pure-Python install on failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            warnings.warn(f"compiled kernel skipped: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled kernel {ext.name} skipped: {exc}")


ext_modules = []
if not os.environ.get("QFORMFF_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/qformff/_gfcore.pyx"],
            language_level="3",
        )
    except ImportError:
        warnings.warn("Cython not available; building without the compiled kernel")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
