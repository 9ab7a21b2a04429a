"""Build the optional C sweep kernels.

The package is pure Python; the extension only accelerates the exhaustive
sweeps in monogenic.oracle. If Cython or a C compiler is unavailable the
install still succeeds and the pure-Python kernels are used.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext = Extension(
        "monogenic._sweeps_cy",
        sources=["src/monogenic/_sweeps_cy.pyx"],
    )
    ext.optional = True
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
