"""Build script.

The package is pure Python except for one optional compiled extension,
``kacoh._orbitcore``, which accelerates the Weyl-orbit closure used by the
brute-force torus checker.  If Cython (or a C compiler) is unavailable the
build silently falls back to the pure-Python kernel; nothing else changes.

Set KACOH_NO_EXT=1 to skip the extension entirely.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """build_ext that degrades to a pure build instead of failing."""

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
        print(f"warning: skipping optional extension ({exc}); "
              "using the pure-Python orbit kernel")


def extensions():
    if os.environ.get("KACOH_NO_EXT") == "1":
        return []
    try:
        from Cython.Build import cythonize
        from setuptools.extension import Extension
    except ImportError:
        print("warning: Cython not found; using the pure-Python orbit kernel")
        return []
    return cythonize(
        [Extension("kacoh._orbitcore", ["src/kacoh/_orbitcore.pyx"])],
        language_level="3",
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
