import os

from setuptools import setup

ext_modules = []
if os.environ.get("POLYADIC_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/polyadic/_wdist.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # Pure-Python install: enumeration.py falls back to the numpy engine.
        ext_modules = []

setup(ext_modules=ext_modules)
