import sys

from setuptools import Extension, setup


def extensions():
    """Build the compiled scan kernels when Cython is available.

    The package is fully functional without them; lotpref._kernels
    falls back to the pure-Python twin at import time.
    """
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("lotpref: Cython not found, installing without compiled kernels",
              file=sys.stderr)
        return []
    ext = Extension(
        "lotpref._kernels._fastscan",
        sources=["src/lotpref/_kernels/_fastscan.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions())
