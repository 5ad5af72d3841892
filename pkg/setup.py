"""Build hook for the optional compiled enumeration kernels.

If Cython (or a C compiler) is unavailable the package still installs;
``discut.kernels`` then falls back to the pure-Python twin.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/discut/_kernels_ext.pyx"], language_level=3)
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
