"""Build script: compiles the hot-loop kernels when Cython is available.

The package is fully functional without the compiled extension; _kernels.py
is written in Cython pure-Python mode and runs as ordinary Python if the
build below is skipped or fails.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/f4stable/_kernels.py"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"f4stable: building without compiled kernels ({exc!r})")

setup(ext_modules=ext_modules)
