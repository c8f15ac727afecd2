"""Build the optional Cython eigensolver kernel.

The package works without it: ``bellsym.linalg`` falls back to the
pure-Python kernel when the extension is missing.
"""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("BELLSYM_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("bellsym._jacobi_ext", ["src/bellsym/_jacobi_ext.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
