"""Build script: compiles the optional Cython kernel extension.

The package is pure Python; ``curvedist._kernels._fast`` is a drop-in
compiled mirror of ``curvedist._kernels.pure``.  If Cython or a C
compiler is unavailable the extension is skipped and the package falls
back to the pure kernels at import time.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Swallow extension build failures; the pure backend still works."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"warning: skipping compiled kernels ({exc}); "
              f"using pure-Python fallback")


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/curvedist/_kernels/_fast.pyx"],
        language_level=3,
    )
except ImportError:
    print("warning: Cython not available; building without compiled kernels")

setup(
    ext_modules=ext_modules,
    cmdclass={"build_ext": optional_build_ext},
)
