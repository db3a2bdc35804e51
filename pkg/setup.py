"""Build script.

The package is pure Python except for one optional Cython extension holding
the Littlewood-Richardson inner loop.  If the extension cannot be built the
install still succeeds and the package falls back to the pure-Python kernel
at import time.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the accelerator if possible, otherwise continue without it."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping optional extension build: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: optional extension {ext.name} failed to build: {exc}")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("quiverinv._lrkernel", ["src/quiverinv/_lrkernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
