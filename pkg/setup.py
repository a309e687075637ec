import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the speedup extension if possible, otherwise install pure Python."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"WARNING: building secjam._kernels failed ({exc}); "
              "falling back to the pure-Python kernels")


if os.environ.get("SECJAM_NO_EXT"):
    ext_modules = []
else:
    try:
        from Cython.Build import cythonize
    except ImportError:
        ext_modules = []
    else:
        ext_modules = cythonize(
            [Extension("secjam._kernels", ["src/secjam/_kernels.pyx"])],
            language_level=3,
        )

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
