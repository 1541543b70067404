import os

from setuptools import setup, Extension

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("CLUSTERCRYSTAL_NO_EXT"):
    ext_modules = cythonize(
        [Extension("clustercrystal._ckernel", ["src/clustercrystal/_ckernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
