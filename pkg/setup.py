"""Build script.

The compiled reduction kernel is optional: if Cython or a C compiler is
missing the package installs anyway and falls back to the pure Python twin
at import time. Set TORICIP_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"toricip: skipping compiled kernel ({exc}); pure Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"toricip: failed to build {ext.name} ({exc}); pure Python fallback will be used")


def extensions():
    if os.environ.get("TORICIP_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("toricip._fastreduce", ["src/toricip/_fastreduce.pyx"])],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
