"""Build script: compiles the optional accelerator extension.

The package works without the extension (a pure-Python twin of the
kernels is selected at import time), so the extension is marked
optional and a failed compile does not fail the install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "riordan._fastkernels",
                ["src/riordan/_fastkernels.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
