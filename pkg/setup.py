"""Build hook for the optional compiled kernels.

The package is fully functional without the extension (a numpy fallback
is selected at import time); a failed compile must not fail the install.
"""

from setuptools import Extension, setup

extensions = []
try:
    from Cython.Build import cythonize

    ext = Extension(
        "desingzeta._ckernels",
        ["src/desingzeta/numeric/_ckernels.pyx"],
        extra_compile_args=["-O3"],
    )
    ext.optional = True
    extensions = cythonize([ext], compiler_directives={"language_level": "3"})
    for e in extensions:
        e.optional = True
except ImportError:
    pass

setup(ext_modules=extensions)
