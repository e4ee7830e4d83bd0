"""Build script: compiles the optional Cython min-weight kernel if Cython is available."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/syncqec/_kernels/_minweight.pyx"],
        language_level="3",
    )
except Exception:
    # Pure-Python fallback kernel is used when the extension is unavailable.
    ext_modules = []

setup(ext_modules=ext_modules)
